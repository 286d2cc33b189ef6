//! The families `E_T(a,b)` with a rational point `(0,0)` of order `l`, their
//! `l`-isogenous quotients `Ẽ_T(a,b)`, and the torsion checks around them.

mod families;
mod points;
mod torsion;
mod velu;

pub use families::{
    build_pair, e_model, e_tilde_closed_form, normalize_params, CurvePair, Family, ParamSpec,
};
pub use points::{torsion_point_order, Point};
pub use torsion::{tilde_c30_torsion, tilde_c3_torsion};
pub use velu::velu_quotient;
