//! Isomorphism classes, universality scans, exact clique numbers and
//! limit tables.

pub mod canon;
pub mod clique;
pub mod limits;
pub mod obstruction;
pub(crate) mod scan;
pub mod universality;

pub use canon::{canonical_form, enumerate_classes, CanonicalCode, IsoClassTable};
pub use clique::{clique_number, independence_number, CliqueResult, CliqueSearch};
pub use universality::{has_induced, has_induced_with, is_l_universal, is_l_universal_with, ClassEntry, UniversalityReport};
pub use limits::{limit_table, Family, LimitRow};
pub use obstruction::{obstruction_certificate, obstruction_certificate_from, ObstructionCertificate};
