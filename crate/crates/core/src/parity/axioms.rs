//! Conformance of a parity scheme with the parity axioms on a single move.

use std::fmt;

use super::{Parity, ParityAssignment, Z2};
use crate::error::Result;
use crate::moves::{apply_move, Direction, MoveInstance, RelationKind};
use crate::word::BraidWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// 1: letters outside the rewritten subword keep their parity.
    Spectators,
    /// 2: ζ_i ζ_j → ζ_j ζ_i keeps both parities.
    FarCommutativityZZ,
    /// 3: ζ_i τ_j → τ_j ζ_i keeps the parity of ζ_i.
    FarCommutativityZT,
    /// 4: both letters of ζ_i ζ_i have the same parity.
    ClassicalR2,
    /// 5(a): an even number of odd letters among ζ_i ζ_{i+1} ζ_i.
    R3OddCount,
    /// 5(b): upper ζ_i on the left matches lower ζ_{i+1} on the right.
    R3Upper,
    /// 5(c): middle letters match.
    R3Middle,
    /// 5(d): lower ζ_i on the left matches upper ζ_{i+1} on the right.
    R3Lower,
    /// 6: ζ_i of τ_i τ_{i+1} ζ_i matches ζ_{i+1} of ζ_{i+1} τ_i τ_{i+1}.
    Semivirtual,
    /// 7: virtualization keeps the parity of ζ_i.
    Virtualization,
}

impl Axiom {
    pub fn label(self) -> &'static str {
        match self {
            Axiom::Spectators => "1",
            Axiom::FarCommutativityZZ => "2",
            Axiom::FarCommutativityZT => "3",
            Axiom::ClassicalR2 => "4",
            Axiom::R3OddCount => "5a",
            Axiom::R3Upper => "5b",
            Axiom::R3Middle => "5c",
            Axiom::R3Lower => "5d",
            Axiom::Semivirtual => "6",
            Axiom::Virtualization => "7",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "axiom {}", self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomReport {
    /// Every axiom relevant to the move held; lists the ones evaluated.
    Pass {
        checked: Vec<Axiom>,
    },
    Violation {
        axiom: Axiom,
        detail: String,
    },
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        matches!(self, AxiomReport::Pass { .. })
    }
}

struct Checker {
    checked: Vec<Axiom>,
}

impl Checker {
    fn require(&mut self, axiom: Axiom, holds: bool, detail: impl FnOnce() -> String) -> Option<AxiomReport> {
        if !self.checked.contains(&axiom) {
            self.checked.push(axiom);
        }
        if holds {
            None
        } else {
            Some(AxiomReport::Violation { axiom, detail: detail() })
        }
    }
}

fn parity_at(a: &ParityAssignment, p: usize) -> Z2 {
    a.get(p).expect("classical letter carries a parity")
}

/// Evaluates the axioms relevant to `m` on the pair (`word`, result of `m`).
///
/// Errors if the move does not apply or the scheme is undefined on either word.
pub fn check_parity_axioms<P: Parity + ?Sized>(scheme: &P, word: &BraidWord, m: &MoveInstance) -> Result<AxiomReport> {
    let (result, corr) = apply_move(word, m)?;
    let before = scheme.assign(word)?;
    let after = scheme.assign(&result)?;
    let mut checker = Checker { checked: Vec::new() };
    let start = m.position;
    let src_len = m.source().len();
    let inside = |p: usize| start <= p && p < start + src_len;

    for &(p, z) in before.values() {
        if inside(p) {
            continue;
        }
        let q = corr.forward(p).expect("spectators survive");
        let after_z = parity_at(&after, q);
        if let Some(v) =
            checker.require(Axiom::Spectators, z == after_z, || format!("letter {p} was {z}, became {after_z} at {q}"))
        {
            return Ok(v);
        }
    }

    let transported = match m.relation.kind {
        RelationKind::FarCommutativityZZ => Some(Axiom::FarCommutativityZZ),
        RelationKind::FarCommutativityZT => Some(Axiom::FarCommutativityZT),
        RelationKind::Virtualization => Some(Axiom::Virtualization),
        RelationKind::SemivirtualR3 => Some(Axiom::Semivirtual),
        _ => None,
    };
    if let Some(axiom) = transported {
        for &(p, z) in before.values().iter().filter(|(p, _)| inside(*p)) {
            let q = corr.forward(p).expect("letters are transported");
            let after_z = parity_at(&after, q);
            if let Some(v) =
                checker.require(axiom, z == after_z, || format!("letter {p} was {z}, its image {q} is {after_z}"))
            {
                return Ok(v);
            }
        }
    }

    match m.relation.kind {
        RelationKind::ClassicalR2 => {
            // the pair lives in the source for a deletion, in the result for an insertion
            let side = if m.direction == Direction::LeftToRight { &before } else { &after };
            let (x, y) = (parity_at(side, start), parity_at(side, start + 1));
            if let Some(v) = checker.require(Axiom::ClassicalR2, x == y, || format!("pair has parities {x}, {y}")) {
                return Ok(v);
            }
        }
        RelationKind::ClassicalR3 => {
            let (lhs, rhs) = match m.direction {
                Direction::LeftToRight => (&before, &after),
                Direction::RightToLeft => (&after, &before),
            };
            let l: Vec<Z2> = (0..3).map(|k| parity_at(lhs, start + k)).collect();
            let r: Vec<Z2> = (0..3).map(|k| parity_at(rhs, start + k)).collect();
            let odd = l.iter().filter(|z| z.is_odd()).count();
            let checks = [
                (Axiom::R3OddCount, odd % 2 == 0),
                (Axiom::R3Upper, l[0] == r[2]),
                (Axiom::R3Middle, l[1] == r[1]),
                (Axiom::R3Lower, l[2] == r[0]),
            ];
            for (axiom, holds) in checks {
                if let Some(v) = checker.require(axiom, holds, || format!("left side {l:?}, right side {r:?}")) {
                    return Ok(v);
                }
            }
        }
        _ => {}
    }
    Ok(AxiomReport::Pass { checked: checker.checked })
}
