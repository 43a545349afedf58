//! Interval polynomials, their Kharitonov extremal parts and vertices, value
//! sets on the imaginary axis, and the box-level vertex certificates.

mod family;
mod index_set;
mod vertex_checks;

pub(crate) use family::rect_excludes_zero;
pub use family::{
    extremal_parts, value_set_rect, vertex_polynomial, zero_exclusion, ComplexBox, ExtremalParts, IntervalPolynomial,
    RealInterval, ValueSetRectangle,
};
pub use index_set::{index_set, Bound, IndexSet, IndexSetName, VertexIndexTuple};
pub(crate) use vertex_checks::unstable_vertex;
pub use vertex_checks::{
    check_w1_vertices, check_w1_vertices_with, check_w2_vertices, check_w6_vertices, family_kharitonov_stable,
    real_box_first_order_stable, rotated_combination,
};
