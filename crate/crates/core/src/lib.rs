//! Free braid words: rewriting under the free braid relations, parities from
//! chord diagrams, the one-term parity bracket, and bigon normal forms that
//! decide the word problem for the group `F_n`.
//!
//! Words are read top to bottom; strands are named by their top endpoint and
//! all generator indices and strand numbers are 1-based.
//!
//! ```
//! use freebraid::{bracket, parse_word, Scheme};
//!
//! let beta = parse_word(freebraid::scenario::BRUNNIAN).unwrap();
//! let b = bracket(&beta, &Scheme::Gaussian).unwrap();
//! assert_eq!(b.word, beta);
//! ```

pub mod bracket;
pub mod error;
pub mod moves;
pub mod normalform;
pub mod oracle;
pub mod parity;
pub mod perm;
pub mod render;
pub mod scenario;
pub mod word;

pub use bracket::{
    bracket, brackets_equal, is_odd_irreducible, verify_reproduction, BracketResult, ReproductionReport,
};
pub use error::{Error, Result};
pub use moves::{
    applicable_moves, apply_move, scramble, Direction, LetterCorrespondence, MoveInstance, MoveSet, Relation,
    RelationKind, Scramble,
};
pub use normalform::{
    canonical_code, f_equal, find_bigons, irreducible_form, reduce_bigon, strongly_equal, Bigon, CanonicalCode,
};
pub use oracle::{bfs_ball, oracle_equal, EquivalenceBall, OracleVerdict};
pub use parity::{
    check_parity_axioms, chord_diagram, component_parity, gaussian_parity, permutation_braid, q_gaussian_parity,
    AxiomReport, ChordDiagram, Parity, ParityAssignment, Scheme, StrandPartition, Z2,
};
pub use perm::{closure_components, permutation, strand_trace, Closure, Permutation, StrandTrace};
pub use render::{render, render_ascii, render_svg, RenderFormat};
pub use scenario::{scenario_beta_prime, scenario_brunnian, ScenarioReport};
pub use word::{parse_any, parse_word, BraidWord, Format, Letter, LetterKind};
