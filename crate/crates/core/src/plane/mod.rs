//! Ternary forms, points of the projective plane and the Hermitian curve.
mod factor;
mod form;
mod hermitian;
mod point;

pub use factor::{
    absolute_irreducibility_status, find_smooth_point, is_singular_point, reducibility_search,
    AbsoluteIrreducibility, Reducibility, DEFAULT_BUDGET,
};
pub use form::{monomial_index_desc, monomials_desc, num_monomials, Exps, TernaryForm};
pub use hermitian::{
    common_points, hermitian_model, points_on, HermitianCurve, IntersectionReport, Model,
};
pub use point::{enumerate_proj_points, for_each_chart_point, num_proj_points, PointRecord, ProjPoint};
