//! Certifying recognition of two-clique graphs and quasi-line graphs.
//!
//! Every decision comes with evidence that can be checked independently:
//! a clique partition for a positive answer, an induced odd antihole for a
//! negative one.

mod cover;
mod extend;
mod lemma1;
mod quasi_line;
mod types;
mod verify;

pub use cover::{shortest_odd_complement_cycle, two_clique_cover};
pub use extend::{extend_cover, incremental_two_clique_cover};
pub use lemma1::{check_3k1_c5_free, lemma1_partition, ForbiddenWitness};
pub use quasi_line::{quasi_line, quasi_line_parallel};
pub use types::{
    CoverOutcome, Lemma1Partition, OddAntiholeWitness, QuasiLineCertificate, QuasiLineObstruction,
    QuasiLineOutcome, TwoCliqueCover,
};
pub use verify::{
    verify_antihole, verify_obstruction, verify_quasi_line_certificate, verify_two_clique_cover,
};
