//! Exact coefficient fields (Q and simple extensions) and homogeneous
//! bivariate polynomial algebra: the gcd/squarefree/order-splitting kernel
//! every other module consumes.
//!
//! All values are immutable after construction and freely shareable across
//! threads. No rounding happens anywhere.

mod field;
mod parse;
mod poly;

pub use field::{
    field_sqrt, rat, rat_int, rat_nth_root, rat_sqrt, render_field_elem, render_rat, Field,
    FieldElem, FieldSpec, Rat,
};
pub use parse::{parse_field_elem, parse_homog, parse_modulus};
pub use poly::{
    content_normalize, hp_gcd, order_split, render_poly, squarefree_decompose, HomogPoly, Order,
    SquarefreeCluster,
};

/// Invert a field element; alias matching the operation vocabulary.
pub fn field_invert(x: &FieldElem) -> crate::error::Result<FieldElem> {
    x.inv()
}
