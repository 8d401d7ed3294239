//! Brute-force equivalence by breadth-first search over moves.
//!
//! Words are compared literally; equivalence is only ever discovered through
//! explicit move paths, so this module serves as ground truth for the
//! deciders in [`crate::normalform`] at small sizes.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::moves::{applicable_moves, apply_move_word, MoveSet};
use crate::word::BraidWord;

/// Words reachable from `origin` without ever exceeding `length_bound` letters.
#[derive(Debug, Clone)]
pub struct EquivalenceBall {
    pub origin: BraidWord,
    pub moveset: MoveSet,
    pub length_bound: usize,
    /// Members in breadth-first discovery order; `members[0]` is the origin.
    pub members: Vec<BraidWord>,
    index: HashSet<BraidWord>,
}

impl EquivalenceBall {
    pub fn contains(&self, word: &BraidWord) -> bool {
        self.index.contains(word)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Exhaustive breadth-first exploration. Fails with [`Error::CapExceeded`]
/// once more than `node_cap` distinct words have been discovered.
pub fn bfs_ball(word: &BraidWord, moveset: MoveSet, length_bound: usize, node_cap: usize) -> Result<EquivalenceBall> {
    if word.len() > length_bound {
        return Err(Error::Hypothesis(format!("word has {} letters, above the bound {length_bound}", word.len())));
    }
    let mut index = HashSet::new();
    let mut members = Vec::new();
    let mut queue = VecDeque::new();
    index.insert(word.clone());
    members.push(word.clone());
    queue.push_back(word.clone());
    while let Some(current) = queue.pop_front() {
        for m in applicable_moves(&current, moveset) {
            if current.len() + m.target().len() - m.source().len() > length_bound {
                continue;
            }
            let next = apply_move_word(&current, &m).expect("enumerated move applies");
            if index.contains(&next) {
                continue;
            }
            if index.len() >= node_cap {
                return Err(Error::CapExceeded { cap: node_cap });
            }
            index.insert(next.clone());
            members.push(next.clone());
            queue.push_back(next);
        }
    }
    Ok(EquivalenceBall { origin: word.clone(), moveset, length_bound, members, index })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleVerdict {
    Equal,
    /// Not reached within the bound; this is not a proof of inequality.
    NotFoundWithinBound,
    CapExceeded,
}

pub fn oracle_equal(
    w1: &BraidWord,
    w2: &BraidWord,
    moveset: MoveSet,
    length_bound: usize,
    node_cap: usize,
) -> Result<OracleVerdict> {
    if w1.strands() != w2.strands() {
        return Err(Error::StrandMismatch(w1.strands(), w2.strands()));
    }
    if w2.len() > length_bound {
        return Ok(OracleVerdict::NotFoundWithinBound);
    }
    match bfs_ball(w1, moveset, length_bound, node_cap) {
        Ok(ball) if ball.contains(w2) => Ok(OracleVerdict::Equal),
        Ok(_) => Ok(OracleVerdict::NotFoundWithinBound),
        Err(Error::CapExceeded { .. }) => Ok(OracleVerdict::CapExceeded),
        Err(e) => Err(e),
    }
}
