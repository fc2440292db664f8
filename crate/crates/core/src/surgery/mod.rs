//! Forest schemes, the surgery map on diagrams and the surgery-formula
//! arithmetic.

mod kappa;
mod presentation;
mod scheme;

pub use kappa::{kappa_star, occupied_region_report, MultigradedDiagram, OccupancyRow};
pub use presentation::{
    components, labeling_orbit_count, psi, whitehead_example, z_of_surgery, ClasperDatum, LabelingCount,
    SurgeryPresentation, SurgeryValue, WhiteheadReport,
};
pub use scheme::{
    bracket, check_scheme_identities, expand_forest_scheme, format_sum, Clasper, ClasperTag, FormalSum,
    ForestScheme, IdentityCheck, SchemeReport, SurgerySymbol,
};
