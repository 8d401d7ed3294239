//! Bigon reduction, canonical codes and the word problem for the free group `F_n`.
//!
//! A word determines a graph: one vertex per classical crossing, strands
//! running downward between them, virtual crossings ignored. The canonical
//! code records that graph with its top/bottom endpoint order and with the
//! strand-continuation pairing at every crossing. Two words are strongly
//! equivalent iff their codes agree; irreducible words (no bigons) of the
//! same group element are strongly equivalent, which yields [`f_equal`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{permutation, strand_trace, StrandTrace};
use crate::word::BraidWord;

/// Two classical letters on the same strand pair with no classical letter
/// on either strand between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bigon {
    pub positions: (usize, usize),
    /// Strand identities, smaller first.
    pub strands: (usize, usize),
}

fn bigons_with_trace(word: &BraidWord, trace: &StrandTrace) -> Vec<Bigon> {
    let classical = word.classical_positions();
    let mut out = Vec::new();
    for (k, &p) in classical.iter().enumerate() {
        let (i, j) = trace.at(p);
        // the next classical letter touching strand i or j decides
        let next = classical[k + 1..].iter().copied().find(|&q| trace.involves(q, i) || trace.involves(q, j));
        if let Some(q) = next {
            if trace.at(q) == (i, j) {
                out.push(Bigon { positions: (p, q), strands: (i, j) });
            }
        }
    }
    out
}

/// All bigons sorted by position pair.
pub fn find_bigons(word: &BraidWord) -> Vec<Bigon> {
    bigons_with_trace(word, &strand_trace(word))
}

fn is_bigon(word: &BraidWord, b: &Bigon) -> bool {
    let (p, q) = b.positions;
    if p >= q || q >= word.len() {
        return false;
    }
    let letters = word.letters();
    if !letters[p].is_classical() || !letters[q].is_classical() {
        return false;
    }
    let trace = strand_trace(word);
    let (i, j) = b.strands;
    trace.at(p) == (i, j)
        && trace.at(q) == (i, j)
        && (p + 1..q).all(|r| !letters[r].is_classical() || !(trace.involves(r, i) || trace.involves(r, j)))
}

fn without(word: &BraidWord, p: usize, q: usize) -> BraidWord {
    let letters = word.letters().iter().enumerate().filter(|&(r, _)| r != p && r != q).map(|(_, &l)| l).collect();
    BraidWord::from_parts(word.strands(), letters)
}

/// Deletes both letters of a bigon.
pub fn reduce_bigon(word: &BraidWord, b: &Bigon) -> Result<BraidWord> {
    if !is_bigon(word, b) {
        return Err(Error::StaleBigon(b.positions.0, b.positions.1));
    }
    Ok(without(word, b.positions.0, b.positions.1))
}

/// Reduces the leftmost bigon until none remain, tracking which input
/// positions survive.
pub fn irreducible_form_tracked(word: &BraidWord) -> (BraidWord, Vec<usize>) {
    let mut current = word.clone();
    let mut origin: Vec<usize> = (0..word.len()).collect();
    while let Some(b) = find_bigons(&current).first().copied() {
        let (p, q) = b.positions;
        current = without(&current, p, q);
        origin.remove(q);
        origin.remove(p);
    }
    (current, origin)
}

pub fn irreducible_form(word: &BraidWord) -> BraidWord {
    irreducible_form_tracked(word).0
}

/// Every irreducible word reachable by some order of bigon reductions.
pub fn irreducible_descendants(word: &BraidWord) -> BTreeSet<BraidWord> {
    fn walk(word: &BraidWord, seen: &mut HashMap<BraidWord, ()>, leaves: &mut BTreeSet<BraidWord>) {
        if seen.insert(word.clone(), ()).is_some() {
            return;
        }
        let bigons = find_bigons(word);
        if bigons.is_empty() {
            leaves.insert(word.clone());
        }
        for b in bigons {
            walk(&without(word, b.positions.0, b.positions.1), seen, leaves);
        }
    }
    let mut leaves = BTreeSet::new();
    walk(word, &mut HashMap::new(), &mut leaves);
    leaves
}

/// Canonical form of the crossing graph.
///
/// Crossings are labelled `1..=m` by first encounter, scanning strand 1 top to
/// bottom, then strand 2, and so on.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalCode {
    pub n: usize,
    pub perm: Vec<usize>,
    pub m: usize,
    pub strands: Vec<Vec<usize>>,
}

impl fmt::Display for CanonicalCode {
    /// `n=<n>; perm=<images>; m=<m>` then `s<k>: <labels>` per strand.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let perm: Vec<String> = self.perm.iter().map(|v| v.to_string()).collect();
        write!(f, "n={}; perm={}; m={}", self.n, perm.join(","), self.m)?;
        for (k, labels) in self.strands.iter().enumerate() {
            write!(f, "\ns{}:", k + 1)?;
            for l in labels {
                write!(f, " {l}")?;
            }
        }
        Ok(())
    }
}

pub fn canonical_code(word: &BraidWord) -> CanonicalCode {
    let trace = strand_trace(word);
    let n = word.strands();
    let mut per_strand: Vec<Vec<usize>> = vec![Vec::new(); n];
    for p in word.classical_positions() {
        let (a, b) = trace.at(p);
        per_strand[a - 1].push(p);
        per_strand[b - 1].push(p);
    }
    let mut label: HashMap<usize, usize> = HashMap::new();
    let strands = per_strand
        .iter()
        .map(|seq| {
            seq.iter()
                .map(|p| {
                    let next = label.len() + 1;
                    *label.entry(*p).or_insert(next)
                })
                .collect()
        })
        .collect();
    CanonicalCode { n, perm: permutation(word).images(), m: label.len(), strands }
}

fn same_strands(w1: &BraidWord, w2: &BraidWord) -> Result<()> {
    if w1.strands() != w2.strands() {
        return Err(Error::StrandMismatch(w1.strands(), w2.strands()));
    }
    Ok(())
}

/// Equivalence by every move of `F_n` except the classical second move.
pub fn strongly_equal(w1: &BraidWord, w2: &BraidWord) -> Result<bool> {
    same_strands(w1, w2)?;
    Ok(canonical_code(w1) == canonical_code(w2))
}

/// Decides equality in `F_n`.
pub fn f_equal(w1: &BraidWord, w2: &BraidWord) -> Result<bool> {
    same_strands(w1, w2)?;
    Ok(canonical_code(&irreducible_form(w1)) == canonical_code(&irreducible_form(w2)))
}
