//! Finite abelian groups with `Q/Z`-valued quadratic forms.
//!
//! Values of forms are exact ([`QZ`]); only [`gauss_sum`] leaves exact
//! arithmetic.

mod group;
mod qform;
mod qz;
mod snf;

pub use group::{groups_up_to, Element, FinAbGroup, Subgroup, ENUMERATION_LIMIT};
pub use qform::{all_qforms, bilinear, gauss_sum, radical, BilinearForm, QForm, Rational};
pub use qz::QZ;
pub use snf::{smith_normal_form, Snf};
