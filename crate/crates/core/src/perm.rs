//! Endpoint permutations, closures and strand traces.
//!
//! Strands are identified by their top endpoint `1..=n`. A word's
//! permutation sends `k` to the bottom position where strand `k` ends.
//! Composition reads top to bottom: `p.then(&q)` sends `k` to `q(p(k))`,
//! which is the permutation of the word for `p` stacked above the word for `q`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::BraidWord;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based image
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    /// Builds a permutation from 1-based images: `images[k-1] = f(k)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut image = Vec::with_capacity(n);
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 1..={n}")));
            }
            seen[v - 1] = true;
            image.push(v - 1);
        }
        Ok(Permutation { image })
    }

    pub(crate) fn from_zero_based(image: Vec<usize>) -> Self {
        Permutation { image }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// `f(k)` for 1-based `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.image[k - 1] + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.image.iter().map(|&v| v + 1).collect()
    }

    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.image
    }

    /// Apply `self` first, then `next`.
    pub fn then(&self, next: &Permutation) -> Result<Permutation> {
        if self.len() != next.len() {
            return Err(Error::StrandMismatch(self.len(), next.len()));
        }
        Ok(Permutation { image: self.image.iter().map(|&v| next.image[v]).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (k, &v) in self.image.iter().enumerate() {
            inv[v] = k;
        }
        Permutation { image: inv }
    }

    /// Disjoint cycles, each starting at its smallest element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k + 1);
                k = self.image[k];
            }
            out.push(cycle);
        }
        out
    }

    /// True iff the permutation is a single `n`-cycle.
    pub fn is_cyclic(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        let mut k = self.image[0];
        let mut steps = 1;
        while k != 0 {
            k = self.image[k];
            steps += 1;
        }
        steps == self.len()
    }
}

impl fmt::Display for Permutation {
    /// `1->2 2->1`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.image.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}->{}", k + 1, v + 1)?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Comma separated 1-based image list, e.g. `2,3,1`.
    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidPermutation(format!("`{s}`: {e}")))?;
        Permutation::from_images(&images)
    }
}

/// Strands occupying each position after every letter has been applied so far.
/// `arrangement[pos] = strand` (0-based both).
pub(crate) fn for_each_step<F: FnMut(usize, usize, usize)>(word: &BraidWord, mut visit: F) -> Vec<usize> {
    let mut arrangement: Vec<usize> = (0..word.strands()).collect();
    for (p, l) in word.letters().iter().enumerate() {
        let i = l.index() - 1;
        visit(p, arrangement[i], arrangement[i + 1]);
        arrangement.swap(i, i + 1);
    }
    arrangement
}

/// The endpoint permutation of a word; every letter transposes the strands at `(i, i+1)`.
pub fn permutation(word: &BraidWord) -> Permutation {
    let arrangement = for_each_step(word, |_, _, _| {});
    let mut image = vec![0; word.strands()];
    for (pos, &strand) in arrangement.iter().enumerate() {
        image[strand] = pos;
    }
    Permutation::from_zero_based(image)
}

/// Number of circles in the closure and the cycles realizing them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Closure {
    pub components: usize,
    pub cycles: Vec<Vec<usize>>,
}

/// Closure joins bottom endpoint `j` to top endpoint `j`.
pub fn closure_components(word: &BraidWord) -> Closure {
    let cycles = permutation(word).cycles();
    Closure { components: cycles.len(), cycles }
}

/// For each letter, the two strand identities at positions `(i, i+1)` just
/// before the letter, smaller first. Identities are 1-based top endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandTrace {
    pairs: Vec<(usize, usize)>,
}

impl StrandTrace {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn at(&self, position: usize) -> (usize, usize) {
        self.pairs[position]
    }

    pub fn involves(&self, position: usize, strand: usize) -> bool {
        let (a, b) = self.pairs[position];
        a == strand || b == strand
    }
}

pub fn strand_trace(word: &BraidWord) -> StrandTrace {
    let mut pairs = Vec::with_capacity(word.len());
    for_each_step(word, |_, a, b| pairs.push((a.min(b) + 1, a.max(b) + 1)));
    StrandTrace { pairs }
}
