//! Specht ideals: generators, variety membership, and certificates of ideal
//! membership with an exact verifier.

mod certificate;
mod dominance;
mod generators;
mod symmetric;

pub use certificate::{Certificate, CertificateEntry, GeneratorRef};
pub use dominance::{dominance_certificate, dominance_step_certificate};
pub use generators::{column_blocks_of_shape, generators_of_shape, point_in_variety, ColumnBlocks};
pub use symmetric::{
    antisymmetrized_sum, symmetric_certificate_char0, symmetric_certificate_general, SymmetricSetup,
};
