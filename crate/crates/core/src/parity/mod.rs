//! Parities: ℤ₂ labels on classical crossings compatible with the moves.
//!
//! Three schemes are provided behind the [`Parity`] trait:
//!
//! * `gaussian`: a crossing is odd iff its chord in the closure's chord
//!   diagram is linked with an odd number of chords (cyclic permutations only);
//! * `qgaussian:Q=<images>`: Gaussian parity of the word followed by a
//!   virtual-only braid realizing `Q`, for words whose permutation `P`
//!   makes `P` then `Q` cyclic;
//! * `component:N1=<strands>`: a crossing is odd iff its two strands lie on
//!   different sides of the partition `N1 ⊔ N2`.

mod axioms;
mod chord;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

pub use axioms::{check_parity_axioms, Axiom, AxiomReport};
pub use chord::{chord_diagram, ChordDiagram};

use crate::error::{Error, Result};
use crate::perm::{permutation, strand_trace, Permutation};
use crate::word::{BraidWord, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Z2 {
    Even,
    Odd,
}

impl Z2 {
    pub fn from_count(count: usize) -> Self {
        if count.is_multiple_of(2) {
            Z2::Even
        } else {
            Z2::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Z2::Odd
    }
}

impl fmt::Display for Z2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Z2::Even => "even",
            Z2::Odd => "odd",
        })
    }
}

/// Parities of the classical letters of one specific word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityAssignment {
    scheme: String,
    values: Vec<(usize, Z2)>,
}

impl ParityAssignment {
    /// `values` must be sorted by position.
    fn new(scheme: String, values: Vec<(usize, Z2)>) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0].0 < w[1].0));
        ParityAssignment { scheme, values }
    }

    /// Designation of the scheme that produced this assignment.
    pub fn scheme(&self) -> &str {
        &self.scheme
    }

    /// `(letter position, parity)` for every classical letter, by position.
    pub fn values(&self) -> &[(usize, Z2)] {
        &self.values
    }

    /// Parity of the letter at `position`; `None` for virtual letters.
    pub fn get(&self, position: usize) -> Option<Z2> {
        self.values.binary_search_by_key(&position, |&(p, _)| p).ok().map(|k| self.values[k].1)
    }

    pub fn odd_count(&self) -> usize {
        self.values.iter().filter(|(_, z)| z.is_odd()).count()
    }

    pub fn all_odd(&self) -> bool {
        self.values.iter().all(|(_, z)| z.is_odd())
    }
}

/// A parity scheme with its parameters bound.
pub trait Parity {
    /// The designation string, e.g. `gaussian` or `component:N1=1,2`.
    fn designation(&self) -> String;

    /// Labels every classical letter, or explains why the scheme does not apply.
    fn assign(&self, word: &BraidWord) -> Result<ParityAssignment>;
}

/// Two disjoint parts covering `{1, …, n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandPartition {
    first: BTreeSet<usize>,
    second: BTreeSet<usize>,
}

impl StrandPartition {
    /// `first` is N₁; N₂ is the complement in `1..=n`.
    pub fn new(n: usize, first: impl IntoIterator<Item = usize>) -> Result<Self> {
        let first: BTreeSet<usize> = first.into_iter().collect();
        if let Some(&bad) = first.iter().find(|&&s| s == 0 || s > n) {
            return Err(Error::InvalidPartition(format!("strand {bad} is not in 1..={n}")));
        }
        let second = (1..=n).filter(|s| !first.contains(s)).collect();
        Ok(StrandPartition { first, second })
    }

    /// Both parts given explicitly; they must be disjoint and cover `1..=n`.
    pub fn from_parts(n: usize, first: &[usize], second: &[usize]) -> Result<Self> {
        let a: BTreeSet<usize> = first.iter().copied().collect();
        let b: BTreeSet<usize> = second.iter().copied().collect();
        if a.len() != first.len() || b.len() != second.len() || !a.is_disjoint(&b) {
            return Err(Error::InvalidPartition("parts overlap or repeat strands".into()));
        }
        if a.len() + b.len() != n || a.iter().chain(&b).any(|&s| s == 0 || s > n) {
            return Err(Error::InvalidPartition(format!("parts do not cover 1..={n}")));
        }
        Ok(StrandPartition { first: a, second: b })
    }

    pub fn first(&self) -> &BTreeSet<usize> {
        &self.first
    }

    pub fn second(&self) -> &BTreeSet<usize> {
        &self.second
    }

    pub fn strands(&self) -> usize {
        self.first.len() + self.second.len()
    }

    pub fn same_part(&self, a: usize, b: usize) -> bool {
        self.first.contains(&a) == self.first.contains(&b)
    }
}

fn gaussian_designated(word: &BraidWord, scheme: String) -> Result<ParityAssignment> {
    let diagram = chord_diagram(word)?;
    let values = word
        .classical_positions()
        .into_iter()
        .map(|p| Ok((p, Z2::from_count(diagram.linking_count(p)?))))
        .collect::<Result<Vec<_>>>()?;
    Ok(ParityAssignment::new(scheme, values))
}

/// Gaussian parity; requires a cyclic permutation.
pub fn gaussian_parity(word: &BraidWord) -> Result<ParityAssignment> {
    gaussian_designated(word, "gaussian".into())
}

/// A virtual-only word with permutation `q`, built by selection sort: the
/// strand bound for slot 1 is walked left with adjacent transpositions, then
/// slot 2, and so on.
pub fn permutation_braid(q: &Permutation) -> BraidWord {
    let n = q.len();
    let inverse = q.inverse();
    let mut arrangement: Vec<usize> = (0..n).collect();
    let mut letters = Vec::new();
    for slot in 0..n {
        let wanted = inverse.zero_based()[slot];
        let from = arrangement.iter().position(|&s| s == wanted).expect("bijection");
        for r in (slot..from).rev() {
            letters.push(Letter::virt(r + 1));
            arrangement.swap(r, r + 1);
        }
    }
    BraidWord::from_parts(n.max(1), letters)
}

fn q_designation(q: &Permutation) -> String {
    let images: Vec<String> = q.images().iter().map(|v| v.to_string()).collect();
    format!("qgaussian:Q={}", images.join(","))
}

/// Gaussian parity of `word · β_Q`, restricted to the letters of `word`.
pub fn q_gaussian_parity(word: &BraidWord, q: &Permutation) -> Result<ParityAssignment> {
    if q.len() != word.strands() {
        return Err(Error::StrandMismatch(word.strands(), q.len()));
    }
    let composite = permutation(word).then(q)?;
    if !composite.is_cyclic() {
        return Err(Error::ParityUndefined(format!(
            "P then Q has {} cycles; Q-Gaussian parity requires it to be cyclic",
            composite.cycles().len()
        )));
    }
    let extended = word.concat(&permutation_braid(q))?;
    // β_Q is virtual only, so every chord comes from `word`
    gaussian_designated(&extended, q_designation(q))
}

fn component_designation(first: &BTreeSet<usize>) -> String {
    let parts: Vec<String> = first.iter().map(|s| s.to_string()).collect();
    format!("component:N1={}", parts.join(","))
}

/// Odd iff the two strands at a crossing lie in different parts.
pub fn component_parity(word: &BraidWord, partition: &StrandPartition) -> Result<ParityAssignment> {
    if partition.strands() != word.strands() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} strands, word has {}",
            partition.strands(),
            word.strands()
        )));
    }
    let trace = strand_trace(word);
    let values = word
        .classical_positions()
        .into_iter()
        .map(|p| {
            let (a, b) = trace.at(p);
            (p, if partition.same_part(a, b) { Z2::Even } else { Z2::Odd })
        })
        .collect();
    Ok(ParityAssignment::new(component_designation(&partition.first), values))
}

/// A parity scheme selected by designation string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scheme {
    Gaussian,
    /// Q-Gaussian parity for a fixed completing permutation `Q`.
    QGaussian(Permutation),
    /// Component-wise parity given by N₁; N₂ is the complement in the word's strands.
    Component(BTreeSet<usize>),
}

impl Parity for Scheme {
    fn designation(&self) -> String {
        match self {
            Scheme::Gaussian => "gaussian".into(),
            Scheme::QGaussian(q) => q_designation(q),
            Scheme::Component(first) => component_designation(first),
        }
    }

    fn assign(&self, word: &BraidWord) -> Result<ParityAssignment> {
        match self {
            Scheme::Gaussian => gaussian_parity(word),
            Scheme::QGaussian(q) => q_gaussian_parity(word, q),
            Scheme::Component(first) => {
                let partition = StrandPartition::new(word.strands(), first.iter().copied())?;
                component_parity(word, &partition)
            }
        }
    }
}

impl Parity for StrandPartition {
    fn designation(&self) -> String {
        component_designation(&self.first)
    }

    fn assign(&self, word: &BraidWord) -> Result<ParityAssignment> {
        component_parity(word, self)
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.designation())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "gaussian" {
            return Ok(Scheme::Gaussian);
        }
        if let Some(list) = s.strip_prefix("qgaussian:Q=") {
            return list.parse().map(Scheme::QGaussian);
        }
        if let Some(list) = s.strip_prefix("component:N1=") {
            let first = list
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| t.trim().parse::<usize>())
                .collect::<std::result::Result<BTreeSet<_>, _>>()
                .map_err(|e| Error::InvalidScheme(format!("`{s}`: {e}")))?;
            if first.contains(&0) {
                return Err(Error::InvalidPartition("strands are numbered from 1".into()));
            }
            return Ok(Scheme::Component(first));
        }
        Err(Error::InvalidScheme(format!("`{s}` (expected gaussian, component:N1=<list> or qgaussian:Q=<list>)")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn w(s: &str) -> BraidWord {
        parse_word(s).unwrap()
    }

    fn parities(a: &ParityAssignment) -> Vec<Z2> {
        a.values().iter().map(|&(_, z)| z).collect()
    }

    #[test]
    fn permutation_braids() {
        assert!(permutation_braid(&Permutation::identity(4)).is_empty());
        assert_eq!(permutation_braid(&Permutation::from_images(&[2, 1]).unwrap()), w("n=2; t1"));
        let q = Permutation::from_images(&[2, 3, 1]).unwrap();
        let b = permutation_braid(&q);
        assert_eq!(b, w("n=3; t2 t1"));
        assert_eq!(permutation(&b), q);
    }

    #[test]
    fn gaussian_examples() {
        assert_eq!(parities(&gaussian_parity(&w("n=2; z1")).unwrap()), vec![Z2::Even]);
        assert_eq!(parities(&gaussian_parity(&w("n=2; z1 t1 z1")).unwrap()), vec![Z2::Odd, Z2::Odd]);
        assert!(matches!(gaussian_parity(&w("n=3; z1 z1")), Err(Error::ParityUndefined(_))));
    }

    #[test]
    fn q_gaussian_examples() {
        let swap = Permutation::from_images(&[2, 1]).unwrap();
        let e = q_gaussian_parity(&BraidWord::empty(2), &swap).unwrap();
        assert!(e.values().is_empty());
        assert_eq!(e.scheme(), "qgaussian:Q=2,1");
        let a = q_gaussian_parity(&w("n=2; z1 z1"), &swap).unwrap();
        assert_eq!(parities(&a), vec![Z2::Odd, Z2::Odd]);
        assert!(q_gaussian_parity(&w("n=2; z1 z1"), &Permutation::identity(2)).is_err());
        assert!(q_gaussian_parity(&w("n=2; z1 z1"), &Permutation::identity(3)).is_err());
    }

    #[test]
    fn q_gaussian_with_identity_is_gaussian() {
        let word = w("n=3; z1 z2 t1 z2");
        assert!(permutation(&word).is_cyclic());
        let q = q_gaussian_parity(&word, &Permutation::identity(3)).unwrap();
        assert_eq!(q.values(), gaussian_parity(&word).unwrap().values());
    }

    #[test]
    fn component_examples() {
        let p = StrandPartition::new(4, [1, 2]).unwrap();
        assert_eq!(parities(&component_parity(&w("n=4; z1"), &p).unwrap()), vec![Z2::Even]);
        assert_eq!(parities(&component_parity(&w("n=4; z2"), &p).unwrap()), vec![Z2::Odd]);
        assert_eq!(parities(&component_parity(&w("n=4; t1 z1"), &p).unwrap()), vec![Z2::Even]);
        assert!(component_parity(&w("n=3; z1"), &p).is_err());
    }

    #[test]
    fn partitions() {
        assert!(StrandPartition::new(3, [4]).is_err());
        assert!(StrandPartition::from_parts(3, &[1], &[1, 2, 3]).is_err());
        assert!(StrandPartition::from_parts(3, &[1], &[2]).is_err());
        let p = StrandPartition::from_parts(3, &[], &[1, 2, 3]).unwrap();
        assert!(p.same_part(1, 3));
    }

    #[test]
    fn designations_round_trip() {
        for d in ["gaussian", "component:N1=1,3", "component:N1=", "qgaussian:Q=2,3,1"] {
            let s: Scheme = d.parse().unwrap();
            assert_eq!(s.to_string(), d);
        }
        assert!("gauss".parse::<Scheme>().is_err());
        assert!("qgaussian:Q=1,1".parse::<Scheme>().is_err());
        assert!("component:N1=0".parse::<Scheme>().is_err());
    }

    #[test]
    fn scheme_reports_partition_errors() {
        let s: Scheme = "component:N1=5".parse().unwrap();
        assert!(matches!(s.assign(&w("n=3; z1")), Err(Error::InvalidPartition(_))));
    }
}
