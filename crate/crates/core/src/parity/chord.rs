//! Chord diagrams of one-component closures.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::perm::{permutation, strand_trace};
use crate::word::BraidWord;

/// Gauss sequence of the classical crossings along the closure's core circle.
///
/// Crossings are identified by their letter position in the word. Only the
/// cyclic order matters; the sequence starts at the top of strand 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordDiagram {
    gauss_sequence: Vec<usize>,
    chord_of: BTreeMap<usize, (usize, usize)>,
}

impl ChordDiagram {
    /// Builds a diagram from a sequence in which every symbol occurs exactly twice.
    pub fn from_sequence(gauss_sequence: Vec<usize>) -> Result<Self> {
        let mut seen: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (slot, &c) in gauss_sequence.iter().enumerate() {
            seen.entry(c).or_default().push(slot);
        }
        let mut chord_of = BTreeMap::new();
        for (c, slots) in seen {
            match slots[..] {
                [a, b] => {
                    chord_of.insert(c, (a, b));
                }
                _ => {
                    return Err(Error::Syntax(format!(
                        "crossing {c} occurs {} times in the Gauss sequence",
                        slots.len()
                    )))
                }
            }
        }
        Ok(ChordDiagram { gauss_sequence, chord_of })
    }

    pub fn gauss_sequence(&self) -> &[usize] {
        &self.gauss_sequence
    }

    /// Both slots of chord `c` in the Gauss sequence, increasing.
    pub fn chord(&self, c: usize) -> Option<(usize, usize)> {
        self.chord_of.get(&c).copied()
    }

    pub fn chords(&self) -> impl Iterator<Item = usize> + '_ {
        self.chord_of.keys().copied()
    }

    pub fn chord_count(&self) -> usize {
        self.chord_of.len()
    }

    /// Whether the endpoints of `b` lie on different arcs cut out by `a`.
    pub fn linked(&self, a: usize, b: usize) -> Result<bool> {
        let (a0, a1) = self.chord(a).ok_or(Error::UnknownChord(a))?;
        let (b0, b1) = self.chord(b).ok_or(Error::UnknownChord(b))?;
        let inside = |s: usize| a0 < s && s < a1;
        Ok(inside(b0) != inside(b1))
    }

    /// Number of chords linked with `c`.
    pub fn linking_count(&self, c: usize) -> Result<usize> {
        let mut count = 0;
        for d in self.chords() {
            if d != c && self.linked(c, d)? {
                count += 1;
            }
        }
        Ok(count)
    }

    /// The same diagram read from slot `k` onwards.
    pub fn rotated(&self, k: usize) -> ChordDiagram {
        let mut seq = self.gauss_sequence.clone();
        if !seq.is_empty() {
            let k = k % seq.len();
            seq.rotate_left(k);
        }
        ChordDiagram::from_sequence(seq).expect("rotation keeps multiplicities")
    }
}

/// Walks the closure from the top of strand 1, recording classical crossings.
pub fn chord_diagram(word: &BraidWord) -> Result<ChordDiagram> {
    let perm = permutation(word);
    if !perm.is_cyclic() {
        let k = perm.cycles().len();
        return Err(Error::ParityUndefined(format!(
            "closure has {k} components; Gaussian parity requires a cyclic permutation"
        )));
    }
    let trace = strand_trace(word);
    let mut per_strand: Vec<Vec<usize>> = vec![Vec::new(); word.strands()];
    for p in word.classical_positions() {
        let (a, b) = trace.at(p);
        per_strand[a - 1].push(p);
        per_strand[b - 1].push(p);
    }
    let mut seq = Vec::with_capacity(2 * word.classical_count());
    let mut strand = 1;
    for _ in 0..word.strands() {
        seq.extend_from_slice(&per_strand[strand - 1]);
        strand = perm.apply(strand);
    }
    ChordDiagram::from_sequence(seq)
}
