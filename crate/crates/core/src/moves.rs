//! Defining relations of the free groups and their application to words.
//!
//! Every relation below is a pair of subwords `lhs = rhs`. The moves of the
//! group generated by classical and virtual letters are all relations except
//! [`RelationKind::ClassicalR3`]; adding it gives the quotient of free braids.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::word::{BraidWord, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationKind {
    /// τ_i τ_i = 1
    VirtualR2,
    /// ζ_i ζ_i = 1
    ClassicalR2,
    /// τ_i ζ_i = ζ_i τ_i
    Virtualization,
    /// ζ_i ζ_j = ζ_j ζ_i, i + 2 ≤ j
    FarCommutativityZZ,
    /// ζ_i τ_j = τ_j ζ_i, |i - j| ≥ 2
    FarCommutativityZT,
    /// τ_i τ_j = τ_j τ_i, i + 2 ≤ j
    FarCommutativityTT,
    /// τ_i τ_{i+1} τ_i = τ_{i+1} τ_i τ_{i+1}
    VirtualR3,
    /// τ_i τ_{i+1} ζ_i = ζ_{i+1} τ_i τ_{i+1}
    SemivirtualR3,
    /// ζ_i ζ_{i+1} ζ_i = ζ_{i+1} ζ_i ζ_{i+1}
    ClassicalR3,
}

impl RelationKind {
    pub const ALL: [RelationKind; 9] = [
        RelationKind::VirtualR2,
        RelationKind::ClassicalR2,
        RelationKind::Virtualization,
        RelationKind::FarCommutativityZZ,
        RelationKind::FarCommutativityZT,
        RelationKind::FarCommutativityTT,
        RelationKind::VirtualR3,
        RelationKind::SemivirtualR3,
        RelationKind::ClassicalR3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RelationKind::VirtualR2 => "VirtualR2",
            RelationKind::ClassicalR2 => "ClassicalR2",
            RelationKind::Virtualization => "Virtualization",
            RelationKind::FarCommutativityZZ => "FarCommutativityZZ",
            RelationKind::FarCommutativityZT => "FarCommutativityZT",
            RelationKind::FarCommutativityTT => "FarCommutativityTT",
            RelationKind::VirtualR3 => "VirtualR3",
            RelationKind::SemivirtualR3 => "SemivirtualR3",
            RelationKind::ClassicalR3 => "ClassicalR3",
        }
    }

    fn is_far(self) -> bool {
        matches!(
            self,
            RelationKind::FarCommutativityZZ | RelationKind::FarCommutativityZT | RelationKind::FarCommutativityTT
        )
    }

    fn is_r2(self) -> bool {
        matches!(self, RelationKind::VirtualR2 | RelationKind::ClassicalR2)
    }

    fn is_r3(self) -> bool {
        matches!(self, RelationKind::VirtualR3 | RelationKind::SemivirtualR3 | RelationKind::ClassicalR3)
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RelationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RelationKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Syntax(format!("unknown relation `{s}`")))
    }
}

/// A relation with its generator indices bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Relation {
    pub kind: RelationKind,
    pub i: usize,
    /// Second index, far commutativity only.
    pub j: Option<usize>,
}

impl Relation {
    pub fn new(kind: RelationKind, i: usize) -> Self {
        assert!(!kind.is_far(), "far commutativity takes two indices");
        Relation { kind, i, j: None }
    }

    pub fn far(kind: RelationKind, i: usize, j: usize) -> Self {
        assert!(kind.is_far(), "{kind} takes a single index");
        Relation { kind, i, j: Some(j) }
    }

    /// Whether the indices make sense on `n` strands.
    pub fn is_valid_for(&self, n: usize) -> bool {
        let max = n.saturating_sub(1);
        let i = self.i;
        match (self.kind, self.j) {
            (RelationKind::VirtualR2 | RelationKind::ClassicalR2 | RelationKind::Virtualization, None) => {
                (1..=max).contains(&i)
            }
            (RelationKind::FarCommutativityZZ | RelationKind::FarCommutativityTT, Some(j)) => {
                i >= 1 && j <= max && i + 2 <= j
            }
            (RelationKind::FarCommutativityZT, Some(j)) => {
                (1..=max).contains(&i) && (1..=max).contains(&j) && i.abs_diff(j) >= 2
            }
            (RelationKind::VirtualR3 | RelationKind::SemivirtualR3 | RelationKind::ClassicalR3, None) => {
                i >= 1 && i < max
            }
            _ => false,
        }
    }

    pub fn lhs(&self) -> Vec<Letter> {
        let (z, t) = (Letter::classical, Letter::virt);
        let i = self.i;
        match self.kind {
            RelationKind::VirtualR2 => vec![t(i), t(i)],
            RelationKind::ClassicalR2 => vec![z(i), z(i)],
            RelationKind::Virtualization => vec![t(i), z(i)],
            RelationKind::FarCommutativityZZ => vec![z(i), z(self.j())],
            RelationKind::FarCommutativityZT => vec![z(i), t(self.j())],
            RelationKind::FarCommutativityTT => vec![t(i), t(self.j())],
            RelationKind::VirtualR3 => vec![t(i), t(i + 1), t(i)],
            RelationKind::SemivirtualR3 => vec![t(i), t(i + 1), z(i)],
            RelationKind::ClassicalR3 => vec![z(i), z(i + 1), z(i)],
        }
    }

    pub fn rhs(&self) -> Vec<Letter> {
        let (z, t) = (Letter::classical, Letter::virt);
        let i = self.i;
        match self.kind {
            RelationKind::VirtualR2 | RelationKind::ClassicalR2 => vec![],
            RelationKind::Virtualization => vec![z(i), t(i)],
            RelationKind::FarCommutativityZZ => vec![z(self.j()), z(i)],
            RelationKind::FarCommutativityZT => vec![t(self.j()), z(i)],
            RelationKind::FarCommutativityTT => vec![t(self.j()), t(i)],
            RelationKind::VirtualR3 => vec![t(i + 1), t(i), t(i + 1)],
            RelationKind::SemivirtualR3 => vec![z(i + 1), t(i), t(i + 1)],
            RelationKind::ClassicalR3 => vec![z(i + 1), z(i), z(i + 1)],
        }
    }

    fn j(&self) -> usize {
        self.j.expect("far commutativity carries j")
    }

    /// `pairing[k]` is the rhs slot of the lhs letter `k`, matching letters that
    /// meet the same pair of strands.
    fn pairing(&self) -> &'static [usize] {
        if self.kind.is_r2() {
            &[]
        } else if self.kind.is_r3() {
            &[2, 1, 0]
        } else {
            &[1, 0]
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} i={}", self.kind, self.i)?;
        if let Some(j) = self.j {
            write!(f, " j={j}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    LeftToRight,
    RightToLeft,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::LeftToRight => Direction::RightToLeft,
            Direction::RightToLeft => Direction::LeftToRight,
        }
    }
}

/// Which relations may be used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveSet {
    /// Relations of the group before the classical third move is imposed.
    F,
    /// All relations, including the classical third move.
    FB,
    /// `F` without the classical second move.
    Strong,
}

impl MoveSet {
    pub fn contains(self, kind: RelationKind) -> bool {
        match self {
            MoveSet::FB => true,
            MoveSet::F => kind != RelationKind::ClassicalR3,
            MoveSet::Strong => !matches!(kind, RelationKind::ClassicalR3 | RelationKind::ClassicalR2),
        }
    }
}

impl FromStr for MoveSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "f" => Ok(MoveSet::F),
            "fb" => Ok(MoveSet::FB),
            "strong" => Ok(MoveSet::Strong),
            _ => Err(Error::Syntax(format!("unknown move set `{s}` (expected f, fb or strong)"))),
        }
    }
}

/// A relation matched at a letter offset in a given direction.
///
/// Field order gives the canonical enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MoveInstance {
    pub position: usize,
    pub relation: Relation,
    pub direction: Direction,
}

impl MoveInstance {
    pub fn new(relation: Relation, position: usize, direction: Direction) -> Self {
        MoveInstance { position, relation, direction }
    }

    pub fn source(&self) -> Vec<Letter> {
        match self.direction {
            Direction::LeftToRight => self.relation.lhs(),
            Direction::RightToLeft => self.relation.rhs(),
        }
    }

    pub fn target(&self) -> Vec<Letter> {
        match self.direction {
            Direction::LeftToRight => self.relation.rhs(),
            Direction::RightToLeft => self.relation.lhs(),
        }
    }

    /// The move that undoes this one on the result word.
    pub fn inverse(&self) -> MoveInstance {
        MoveInstance { direction: self.direction.reversed(), ..*self }
    }

    pub fn is_insertion(&self) -> bool {
        self.relation.kind.is_r2() && self.direction == Direction::RightToLeft
    }

    pub fn matches(&self, word: &BraidWord) -> bool {
        if !self.relation.is_valid_for(word.strands()) {
            return false;
        }
        let src = self.source();
        let letters = word.letters();
        self.position + src.len() <= letters.len() && letters[self.position..self.position + src.len()] == src[..]
    }
}

impl fmt::Display for MoveInstance {
    /// `<relation-id> i=<i> [j=<j>] pos=<offset> dir=<fwd|rev>`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dir = match self.direction {
            Direction::LeftToRight => "fwd",
            Direction::RightToLeft => "rev",
        };
        write!(f, "{} pos={} dir={}", self.relation, self.position, dir)
    }
}

impl FromStr for MoveInstance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Syntax(format!("malformed move `{s}`"));
        let mut tokens = s.split_whitespace();
        let kind: RelationKind = tokens.next().ok_or_else(bad)?.parse()?;
        let (mut i, mut j, mut pos, mut dir) = (None, None, None, None);
        for tok in tokens {
            let (key, value) = tok.split_once('=').ok_or_else(bad)?;
            match key {
                "i" => i = Some(value.parse::<usize>().map_err(|_| bad())?),
                "j" => j = Some(value.parse::<usize>().map_err(|_| bad())?),
                "pos" => pos = Some(value.parse::<usize>().map_err(|_| bad())?),
                "dir" => {
                    dir = Some(match value {
                        "fwd" => Direction::LeftToRight,
                        "rev" => Direction::RightToLeft,
                        _ => return Err(bad()),
                    })
                }
                _ => return Err(bad()),
            }
        }
        let i = i.ok_or_else(bad)?;
        if kind.is_far() != j.is_some() {
            return Err(bad());
        }
        let relation = Relation { kind, i, j };
        Ok(MoveInstance::new(relation, pos.ok_or_else(bad)?, dir.ok_or_else(bad)?))
    }
}

/// Partial bijection between letter positions of a word and of its image under a move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterCorrespondence {
    forward: Vec<Option<usize>>,
    backward: Vec<Option<usize>>,
}

impl LetterCorrespondence {
    /// Result position of source letter `p`, if it survives.
    pub fn forward(&self, p: usize) -> Option<usize> {
        self.forward[p]
    }

    /// Source position of result letter `q`, if it existed before.
    pub fn backward(&self, q: usize) -> Option<usize> {
        self.backward[q]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.forward.iter().enumerate().filter_map(|(p, q)| q.map(|q| (p, q)))
    }
}

/// Candidate relations whose either side may start with `first` (followed by `second`).
fn candidates(first: Letter, second: Option<Letter>, n: usize, out: &mut Vec<Relation>) {
    use RelationKind::*;
    let a = first.index();
    out.clear();
    out.extend([Relation::new(VirtualR2, a), Relation::new(ClassicalR2, a), Relation::new(Virtualization, a)]);
    for i in [a, a.wrapping_sub(1)] {
        if i >= 1 {
            out.extend([Relation::new(VirtualR3, i), Relation::new(SemivirtualR3, i), Relation::new(ClassicalR3, i)]);
        }
    }
    if let Some(b) = second.map(|l| l.index()) {
        if a.abs_diff(b) >= 2 {
            let (lo, hi) = (a.min(b), a.max(b));
            out.extend([Relation::far(FarCommutativityZZ, lo, hi), Relation::far(FarCommutativityTT, lo, hi)]);
            if first.is_classical() {
                out.push(Relation::far(FarCommutativityZT, a, b));
            } else {
                out.push(Relation::far(FarCommutativityZT, b, a));
            }
        }
    }
    out.retain(|r| r.is_valid_for(n));
}

/// Every non-insertion move matching at some position, sorted.
fn matching_moves(word: &BraidWord, moveset: MoveSet) -> Vec<MoveInstance> {
    let letters = word.letters();
    let mut out = Vec::new();
    let mut cands = Vec::new();
    for p in 0..letters.len() {
        candidates(letters[p], letters.get(p + 1).copied(), word.strands(), &mut cands);
        for &rel in &cands {
            if !moveset.contains(rel.kind) {
                continue;
            }
            for dir in [Direction::LeftToRight, Direction::RightToLeft] {
                let m = MoveInstance::new(rel, p, dir);
                if !m.is_insertion() && m.matches(word) {
                    out.push(m);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn insertion_kinds(moveset: MoveSet) -> &'static [RelationKind] {
    if moveset.contains(RelationKind::ClassicalR2) {
        &[RelationKind::VirtualR2, RelationKind::ClassicalR2]
    } else {
        &[RelationKind::VirtualR2]
    }
}

/// All applicable moves, including R2 insertions at every offset, sorted by
/// (position, relation, direction).
pub fn applicable_moves(word: &BraidWord, moveset: MoveSet) -> Vec<MoveInstance> {
    let mut out = matching_moves(word, moveset);
    for pos in 0..=word.len() {
        for &kind in insertion_kinds(moveset) {
            for i in 1..word.strands() {
                out.push(MoveInstance::new(Relation::new(kind, i), pos, Direction::RightToLeft));
            }
        }
    }
    out.sort();
    out
}

fn rewrite(word: &BraidWord, m: &MoveInstance) -> Vec<Letter> {
    let src_len = m.source().len();
    let letters = word.letters();
    let mut out = Vec::with_capacity(letters.len() + 2);
    out.extend_from_slice(&letters[..m.position]);
    out.extend(m.target());
    out.extend_from_slice(&letters[m.position + src_len..]);
    out
}

fn check(word: &BraidWord, m: &MoveInstance) -> Result<()> {
    let ok = if m.is_insertion() {
        m.relation.is_valid_for(word.strands()) && m.position <= word.len()
    } else {
        m.matches(word)
    };
    if ok {
        Ok(())
    } else {
        Err(Error::MoveNotApplicable(m.to_string()))
    }
}

/// Applies `m` without building the letter correspondence.
pub fn apply_move_word(word: &BraidWord, m: &MoveInstance) -> Result<BraidWord> {
    check(word, m)?;
    Ok(BraidWord::from_parts(word.strands(), rewrite(word, m)))
}

/// Replaces the matched source side with the target side.
pub fn apply_move(word: &BraidWord, m: &MoveInstance) -> Result<(BraidWord, LetterCorrespondence)> {
    let result = apply_move_word(word, m)?;
    let (src_len, tgt_len) = (m.source().len(), m.target().len());
    let p = m.position;
    let shift = |q: usize| q + tgt_len - src_len;

    let mut forward = vec![None; word.len()];
    for (q, slot) in forward.iter_mut().enumerate() {
        if q < p {
            *slot = Some(q);
        } else if q >= p + src_len {
            *slot = Some(shift(q));
        }
    }
    let pairing = m.relation.pairing();
    for (k, &r) in pairing.iter().enumerate() {
        let (s, t) = match m.direction {
            Direction::LeftToRight => (k, r),
            Direction::RightToLeft => (r, k),
        };
        forward[p + s] = Some(p + t);
    }
    let mut backward = vec![None; result.len()];
    for (q, t) in forward.iter().enumerate() {
        if let Some(t) = *t {
            backward[t] = Some(q);
        }
    }
    Ok((result, LetterCorrespondence { forward, backward }))
}

/// Outcome of a random walk over moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scramble {
    pub word: BraidWord,
    pub history: Vec<MoveInstance>,
}

/// Seeded random walk: each step applies a uniformly chosen applicable move
/// whose result does not exceed `max_length` letters.
pub fn scramble(word: &BraidWord, steps: usize, moveset: MoveSet, seed: u64, max_length: usize) -> Scramble {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = word.clone();
    let mut history = Vec::with_capacity(steps);
    let kinds = insertion_kinds(moveset);
    for _ in 0..steps {
        let mut moves = matching_moves(&current, moveset);
        moves.retain(|m| current.len() + m.target().len() - m.source().len() <= max_length);
        let per_offset = kinds.len() * (current.strands() - 1);
        let insertions = if current.len() + 2 <= max_length { (current.len() + 1) * per_offset } else { 0 };
        let total = moves.len() + insertions;
        if total == 0 {
            break;
        }
        let pick = rng.gen_range(0..total);
        let m = if pick < moves.len() {
            moves[pick]
        } else {
            let k = pick - moves.len();
            let (pos, rest) = (k / per_offset, k % per_offset);
            let kind = kinds[rest / (current.strands() - 1)];
            let i = rest % (current.strands() - 1) + 1;
            MoveInstance::new(Relation::new(kind, i), pos, Direction::RightToLeft)
        };
        current = apply_move_word(&current, &m).expect("enumerated move applies");
        history.push(m);
    }
    Scramble { word: current, history }
}

/// One line per step.
pub fn format_history(history: &[MoveInstance]) -> String {
    history.iter().map(|m| format!("{m}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::permutation;
    use crate::word::parse_word;

    fn w(s: &str) -> BraidWord {
        parse_word(s).unwrap()
    }

    #[test]
    fn classical_r2_is_found() {
        let moves = applicable_moves(&w("n=2; z1 z1"), MoveSet::F);
        let m = MoveInstance::new(Relation::new(RelationKind::ClassicalR2, 1), 0, Direction::LeftToRight);
        assert!(moves.contains(&m));
        assert_eq!(apply_move(&w("n=2; z1 z1"), &m).unwrap().0, BraidWord::empty(2));
    }

    #[test]
    fn semivirtual_is_found() {
        let word = w("n=3; t1 t2 z1");
        let m = MoveInstance::new(Relation::new(RelationKind::SemivirtualR3, 1), 0, Direction::LeftToRight);
        assert!(applicable_moves(&word, MoveSet::F).contains(&m));
        let (out, corr) = apply_move(&word, &m).unwrap();
        assert_eq!(out, w("n=3; z2 t1 t2"));
        assert_eq!(corr.forward(2), Some(0));
    }

    #[test]
    fn classical_r3_only_in_fb() {
        let word = w("n=3; z1 z2 z1");
        let is_r3 = |m: &MoveInstance| m.relation.kind == RelationKind::ClassicalR3;
        assert!(!applicable_moves(&word, MoveSet::F).iter().any(is_r3));
        assert!(applicable_moves(&word, MoveSet::FB).iter().any(is_r3));
    }

    #[test]
    fn far_commutativity_and_virtualization() {
        let m = MoveInstance::new(Relation::far(RelationKind::FarCommutativityZT, 1, 3), 0, Direction::LeftToRight);
        assert_eq!(apply_move(&w("n=5; z1 t3"), &m).unwrap().0, w("n=5; t3 z1"));

        let moves = applicable_moves(&w("n=2; z1 t1"), MoveSet::F);
        let virt = moves.iter().find(|m| m.relation.kind == RelationKind::Virtualization).unwrap();
        assert_eq!(virt.direction, Direction::RightToLeft);
        assert_eq!(apply_move(&w("n=2; z1 t1"), virt).unwrap().0, w("n=2; t1 z1"));
    }

    #[test]
    fn stale_move_is_rejected() {
        let m = MoveInstance::new(Relation::new(RelationKind::ClassicalR2, 1), 0, Direction::LeftToRight);
        assert!(matches!(apply_move(&w("n=2; z1 t1"), &m), Err(Error::MoveNotApplicable(_))));
        let ins = MoveInstance::new(Relation::new(RelationKind::VirtualR2, 2), 0, Direction::RightToLeft);
        assert!(apply_move(&w("n=2; z1"), &ins).is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_complete_for_insertions() {
        let word = w("n=3; z1");
        let moves = applicable_moves(&word, MoveSet::F);
        assert!(moves.windows(2).all(|p| p[0] < p[1]));
        // 2 offsets x 2 kinds x 2 indices
        assert_eq!(moves.iter().filter(|m| m.is_insertion()).count(), 8);
        assert_eq!(applicable_moves(&word, MoveSet::Strong).iter().filter(|m| m.is_insertion()).count(), 4);
    }

    #[test]
    fn history_lines_round_trip() {
        let m = MoveInstance::new(Relation::far(RelationKind::FarCommutativityZZ, 1, 4), 7, Direction::RightToLeft);
        assert_eq!(m.to_string(), "FarCommutativityZZ i=1 j=4 pos=7 dir=rev");
        assert_eq!(m.to_string().parse::<MoveInstance>().unwrap(), m);
        let m = MoveInstance::new(Relation::new(RelationKind::ClassicalR3, 2), 0, Direction::LeftToRight);
        assert_eq!(m.to_string(), "ClassicalR3 i=2 pos=0 dir=fwd");
        assert_eq!(m.to_string().parse::<MoveInstance>().unwrap(), m);
        assert!("ClassicalR3 i=2 j=4 pos=0 dir=fwd".parse::<MoveInstance>().is_err());
    }

    #[test]
    fn scramble_zero_steps_is_identity() {
        let word = w("n=3; z1 t2");
        let s = scramble(&word, 0, MoveSet::FB, 3, 10);
        assert_eq!(s.word, word);
        assert!(s.history.is_empty());
    }

    #[test]
    fn scramble_is_deterministic_and_bounded() {
        let word = w("n=4; z1 t2 z3");
        let a = scramble(&word, 300, MoveSet::FB, 11, 12);
        let b = scramble(&word, 300, MoveSet::FB, 11, 12);
        assert_eq!(a, b);
        assert_eq!(a.history.len(), 300);
        assert!(a.word.len() <= 12);
        assert_eq!(permutation(&a.word), permutation(&word));
        // replaying the history reproduces the result
        let replay = a.history.iter().fold(word.clone(), |acc, m| apply_move_word(&acc, m).unwrap());
        assert_eq!(replay, a.word);
    }

    #[test]
    fn single_strand_has_no_moves() {
        let s = scramble(&BraidWord::empty(1), 5, MoveSet::F, 0, 10);
        assert!(s.history.is_empty());
    }
}
