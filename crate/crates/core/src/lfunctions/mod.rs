//! Special values of zeta and L-functions: exact values at negative odd
//! integers, rigorous series and Euler-product evaluations at `s >= 2`.

mod dedekind;
mod ffield;
mod poly;
mod series;
mod special;

pub use dedekind::{
    dedekind_zeta_numeric, l_rel_lower_bound, l_rel_numeric, primes_up_to, ramified_primes, residue_field_sizes, LMode,
    NumberField, DEFAULT_PRIME_CUTOFF,
};
pub use ffield::factor_degrees_mod_p;
pub use poly::{poly_discriminant, resultant, IntPoly};
pub use series::{dirichlet_l_numeric, hurwitz_zeta, zeta_numeric};
pub use special::{dedekind_zeta_neg_quad, dirichlet_l_neg, zeta_even_exact, zeta_neg};
