//! The one-term parity bracket and the self-reproduction check.
//!
//! The bracket of a word deletes its even classical letters. For any parity it
//! is an invariant of free braids valued in `F_n`, so a word whose crossings
//! are all odd and which has no bigons appears, up to strong equivalence, as a
//! subword of every equivalent word.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::normalform::{canonical_code, f_equal, find_bigons, irreducible_form_tracked, CanonicalCode};
use crate::parity::Parity;
use crate::perm::permutation;
use crate::word::BraidWord;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketResult {
    pub word: BraidWord,
    /// Source positions of the surviving letters, strictly increasing.
    pub kept_positions: Vec<usize>,
}

/// Deletes every even classical letter.
pub fn bracket<P: Parity + ?Sized>(word: &BraidWord, scheme: &P) -> Result<BracketResult> {
    let parity = scheme.assign(word)?;
    let kept_positions: Vec<usize> = (0..word.len()).filter(|&p| parity.get(p).is_none_or(|z| z.is_odd())).collect();
    Ok(BracketResult { word: word.select(&kept_positions), kept_positions })
}

/// Whether the two brackets are equal in `F_n`.
pub fn brackets_equal<P: Parity + ?Sized>(w1: &BraidWord, w2: &BraidWord, scheme: &P) -> Result<bool> {
    f_equal(&bracket(w1, scheme)?.word, &bracket(w2, scheme)?.word)
}

/// Every classical letter odd and no bigon.
pub fn is_odd_irreducible<P: Parity + ?Sized>(word: &BraidWord, scheme: &P) -> Result<bool> {
    Ok(scheme.assign(word)?.all_odd() && find_bigons(word).is_empty())
}

/// Outcome of [`verify_reproduction`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReproductionReport {
    pub success: bool,
    /// Positions in the candidate word of a subword strongly equivalent to the
    /// odd irreducible word; empty on failure.
    pub kept_positions: Vec<usize>,
    /// Code of the bigon-reduced bracket of the candidate, when it was computed.
    pub canonical_code: Option<String>,
    /// Why the candidate is certainly not equivalent, on failure.
    pub refutation: Option<String>,
}

impl ReproductionReport {
    fn refuted(reason: String, code: Option<&CanonicalCode>) -> Self {
        ReproductionReport {
            success: false,
            kept_positions: Vec::new(),
            canonical_code: code.map(|c| c.to_string()),
            refutation: Some(reason),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }
}

/// Looks for `beta` inside `beta_prime`: brackets `beta_prime`, reduces the
/// bracket's bigons while tracking surviving letters, and compares the result
/// with `beta` up to strong equivalence.
///
/// `beta` must be odd and irreducible for `scheme`. A failed comparison is a
/// certificate that the two words are different free braids.
pub fn verify_reproduction<P: Parity + ?Sized>(
    beta: &BraidWord,
    beta_prime: &BraidWord,
    scheme: &P,
) -> Result<ReproductionReport> {
    if !is_odd_irreducible(beta, scheme)? {
        return Err(Error::Hypothesis(format!("`{beta}` is not odd and irreducible under {}", scheme.designation())));
    }
    if beta.strands() != beta_prime.strands() {
        return Ok(ReproductionReport::refuted(
            format!("strand counts differ ({} vs {})", beta.strands(), beta_prime.strands()),
            None,
        ));
    }
    if permutation(beta) != permutation(beta_prime) {
        return Ok(ReproductionReport::refuted("permutations differ".into(), None));
    }
    let bracketed = match bracket(beta_prime, scheme) {
        Ok(b) => b,
        Err(e) => return Ok(ReproductionReport::refuted(format!("parity undefined on candidate: {e}"), None)),
    };
    let (reduced, survivors) = irreducible_form_tracked(&bracketed.word);
    let code = canonical_code(&reduced);
    if code != canonical_code(beta) {
        return Ok(ReproductionReport::refuted("brackets differ in F_n".into(), Some(&code)));
    }
    let kept_positions = survivors.iter().map(|&k| bracketed.kept_positions[k]).collect();
    Ok(ReproductionReport { success: true, kept_positions, canonical_code: Some(code.to_string()), refutation: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parity::Scheme;
    use crate::word::parse_word;

    fn w(s: &str) -> BraidWord {
        parse_word(s).unwrap()
    }

    #[test]
    fn one_part_partition_keeps_only_virtual_letters() {
        let scheme: Scheme = "component:N1=1,2,3".parse().unwrap();
        let b = bracket(&w("n=3; z1 t2 z2"), &scheme).unwrap();
        assert_eq!(b.word, w("n=3; t2"));
        assert_eq!(b.kept_positions, vec![1]);
    }

    #[test]
    fn q_gaussian_bracket() {
        let scheme: Scheme = "qgaussian:Q=2,1".parse().unwrap();
        let b = bracket(&w("n=2; z1 z1"), &scheme).unwrap();
        assert_eq!(b.word, w("n=2; z1 z1"));
        assert!(brackets_equal(&w("n=2; z1 z1"), &BraidWord::empty(2), &scheme).unwrap());
        assert!(brackets_equal(&w("n=2; z1 z1"), &w("n=2; z1 z1"), &scheme).unwrap());
    }

    #[test]
    fn odd_irreducible_examples() {
        assert!(!is_odd_irreducible(&w("n=2; z1 t1 z1"), &Scheme::Gaussian).unwrap());
        assert!(is_odd_irreducible(&w("n=2; t1"), &Scheme::Gaussian).unwrap());
        // both odd, but they form a bigon
        assert!(!is_odd_irreducible(&w("n=2; z1 z1"), &"qgaussian:Q=2,1".parse::<Scheme>().unwrap()).unwrap());
        assert!(is_odd_irreducible(&w("n=3; z1 z1"), &Scheme::Gaussian).is_err());
    }

    #[test]
    fn reproduction_requires_hypothesis() {
        let r = verify_reproduction(&w("n=2; z1"), &w("n=2; z1"), &Scheme::Gaussian);
        assert!(matches!(r, Err(Error::Hypothesis(_))));
    }

    #[test]
    fn reproduction_refutes_different_permutations() {
        let beta = w("n=2; t1");
        let r = verify_reproduction(&beta, &BraidWord::empty(2), &Scheme::Gaussian).unwrap();
        assert!(!r.success);
        assert_eq!(r.refutation.as_deref(), Some("permutations differ"));
    }
}
