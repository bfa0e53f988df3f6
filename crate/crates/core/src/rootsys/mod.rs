//! Simple root systems, weight lattices and Weyl group actions.

mod layout;
mod system;
mod types;
mod weight;

pub use layout::Layout;
pub use system::{build_root_system, highest_root, RootSystem};
pub use types::{Family, SemisimpleAlgebra, SimpleType};
pub use weight::Weight;

/// Weyl orbit of `w` under the Weyl group of `rs`.
pub fn weyl_orbit(w: &Weight, rs: &RootSystem) -> crate::Result<std::collections::BTreeSet<Weight>> {
    rs.weyl_orbit(w)
}
