//! The Brunnian braid and its one-strand extension as built-in scenarios.

use serde::Serialize;

use crate::bracket::{bracket, verify_reproduction};
use crate::error::{Error, Result};
use crate::moves::{scramble, MoveSet};
use crate::normalform::find_bigons;
use crate::parity::{gaussian_parity, Scheme, Z2};
use crate::perm::{closure_components, permutation};
use crate::word::{parse_word, BraidWord};

/// The 9-strand Brunnian braid with eight classical crossings.
pub const BRUNNIAN: &str = "n=9; t1 t2 t3 z4 t4 t3 t2 z1 t1 t2 t3 t4 t5 z6 t6 t5 t4 z3 t3 t4 t5 t6 t7 t8 z8 t7 t6 z5 t4 t3 t2 z2 t3 t4 t5 t6 z7 t8";

/// Reference reconstruction of the 10-strand extension: the Brunnian word moved
/// one strand to the right, followed by `z1 t2 t3 t2 z1`.
///
/// This is an interpretation of a drawing, not a transcribed word. The tail adds a
/// new leftmost strand and two classical crossings at the bottom left. Deleting
/// them from the closure's Gauss diagram gives back the Brunnian one, and they
/// appear as `X Y ... Y X`, i.e. they form an unoriented second Reidemeister move.
pub const BETA_PRIME: &str = "n=10; t2 t3 t4 z5 t5 t4 t3 z2 t2 t3 t4 t5 t6 z7 t7 t6 t5 z4 t4 t5 t6 t7 t8 t9 z9 t8 t7 z6 t5 t4 t3 z3 t4 t5 t6 t7 z8 t9 z1 t2 t3 t2 z1";

/// Letter positions of the two added crossings in [`BETA_PRIME`].
pub const BETA_PRIME_ADDED: [usize; 2] = [38, 42];

/// Steps, length cap and seed of the scramble used by [`scenario_brunnian`].
pub const SCRAMBLE_STEPS: usize = 1000;
pub const SCRAMBLE_MAX_LENGTH: usize = 200;
pub const SCRAMBLE_SEED: u64 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScenarioReport {
    pub word: String,
    pub checks: Vec<Check>,
}

impl ScenarioReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }
}

impl std::fmt::Display for ScenarioReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "word: {}", self.word)?;
        for c in &self.checks {
            writeln!(f, "[{}] {}: {}", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail)?;
        }
        Ok(())
    }
}

fn check(name: &str, passed: bool, detail: String) -> Check {
    Check { name: name.into(), passed, detail }
}

fn parities_text(word: &BraidWord) -> Result<(usize, String)> {
    let parity = gaussian_parity(word)?;
    let text: Vec<String> = parity.values().iter().map(|(p, z)| format!("{p}:{z}")).collect();
    Ok((parity.odd_count(), text.join(" ")))
}

/// Cyclicity, oddness of every crossing, absence of bigons, the bracket fixed
/// point and one scrambled reproduction.
pub fn scenario_brunnian() -> ScenarioReport {
    let beta = parse_word(BRUNNIAN).expect("built-in word parses");
    let perm = permutation(&beta);
    let m = beta.classical_count();
    let mut checks = vec![check("permutation cyclic", perm.is_cyclic(), perm.to_string())];

    let (odd, detail) = parities_text(&beta).expect("cyclic word");
    checks.push(check("crossings odd", odd == m, format!("{odd}/{m} ({detail})")));

    let bigons = find_bigons(&beta).len();
    checks.push(check("bigons", bigons == 0, bigons.to_string()));

    let b = bracket(&beta, &Scheme::Gaussian).expect("cyclic word");
    let fixed = b.word == beta;
    checks.push(check("bracket equals input", fixed, if fixed { "yes".into() } else { b.word.to_string() }));

    let s = scramble(&beta, SCRAMBLE_STEPS, MoveSet::FB, SCRAMBLE_SEED, SCRAMBLE_MAX_LENGTH);
    let detail_prefix = format!("seed {SCRAMBLE_SEED}, {} moves, length {}", s.history.len(), s.word.len());
    let reproduction = match verify_reproduction(&beta, &s.word, &Scheme::Gaussian) {
        Ok(r) if r.success => {
            check("scrambled reproduction", true, format!("{detail_prefix}, subword {:?}", r.kept_positions))
        }
        Ok(r) => {
            check("scrambled reproduction", false, format!("{detail_prefix}, {}", r.refutation.unwrap_or_default()))
        }
        Err(e) => check("scrambled reproduction", false, format!("{detail_prefix}, {e}")),
    };
    checks.push(reproduction);
    ScenarioReport { word: beta.to_string(), checks }
}

/// Parities of the two added crossings of a 10-strand extension and the number of
/// components of its bracket's closure. `added` defaults to the last two
/// classical letters.
pub fn scenario_beta_prime(beta_prime: &BraidWord, added: Option<[usize; 2]>) -> Result<ScenarioReport> {
    if beta_prime.strands() != 10 {
        return Err(Error::Hypothesis(format!("the extended word has 10 strands, got {}", beta_prime.strands())));
    }
    let parity = gaussian_parity(beta_prime)?;
    let added = match added {
        Some(a) => a,
        None => {
            let classical = beta_prime.classical_positions();
            if classical.len() < 2 {
                return Err(Error::Hypothesis("fewer than two classical letters".into()));
            }
            [classical[classical.len() - 2], classical[classical.len() - 1]]
        }
    };
    let mut checks = Vec::new();
    for p in added {
        let z = parity.get(p).ok_or(Error::UnknownChord(p))?;
        checks.push(check(&format!("added crossing {p}"), z == Z2::Even, z.to_string()));
    }
    let b = bracket(beta_prime, &Scheme::Gaussian)?;
    let comps = closure_components(&b.word).components;
    checks.push(check("bracket", true, b.word.to_string()));
    checks.push(check("bracket closure components", comps == 3, comps.to_string()));
    Ok(ScenarioReport { word: beta_prime.to_string(), checks })
}
