//! Abstract incidence structures, their realizations, reduction, canonical
//! forms and text formats.

pub mod canonical;
pub mod format;
pub mod realization;
pub mod reduce;
pub mod structure;

pub use canonical::{canonical_form, canonical_labeling, is_isomorphic};
pub use format::{format_inc, format_real, parse_inc, parse_real, AnyRealization, FormatError};
pub use realization::{maximal_collinear_sets, verify_realization, Realization, RealizationError};
pub use reduce::{extend, reduce, ExtendError, ReductionStep, ReductionTrace};
pub use structure::{IncidenceStructure, PairTable, PointId, StructureError};
