use alloc::format;

use super::Representation;
use crate::linalg::Matrix;
use crate::report::Report;
use crate::scalars::{Params, Scalar};

/// `⟨ε_a, α_j⟩` with `α_j = ε_j − ε_{j+1}`.
fn pairing(a: usize, j: usize) -> i64 {
    (a == j) as i64 - (a == j + 1) as i64
}

/// Verifies the defining relations (R1)–(R7) of `U_{r,s}(sl_n)` as exact
/// matrix identities. Every failing relation is reported with a witness.
///
/// The second Serre relations are checked in the form
/// `e_i e_{i+1}² − (r+s) e_{i+1} e_i e_{i+1} + rs e_{i+1}² e_i = 0`
/// (and its `f` analogue with `r⁻¹, s⁻¹`).
pub fn check_defining_relations<P: Params>(params: &P, rep: &Representation<P::F>) -> Report<P::F> {
    let n = rep.n();
    let dim = rep.dim();
    let id = Matrix::<P::F>::identity(dim);
    let mut report = Report::new("defining relations");

    // (R1) group-likes are invertible and commute
    for i in 1..n {
        report.check_eq(format!("R1(w{i}*w{i}_inv)"), &rep.w(i).mul(rep.w_inv(i)), &id);
        report.check_eq(format!("R1(w{i}_inv*w{i})"), &rep.w_inv(i).mul(rep.w(i)), &id);
        report.check_eq(format!("R1(wp{i}*wp{i}_inv)"), &rep.wp(i).mul(rep.wp_inv(i)), &id);
        report.check_eq(format!("R1(wp{i}_inv*wp{i})"), &rep.wp_inv(i).mul(rep.wp(i)), &id);
    }
    for i in 1..n {
        for j in 1..n {
            if i < j {
                report.check_zero(format!("R1[w,w](i={i},j={j})"), &rep.w(i).commutator(rep.w(j)));
                report.check_zero(format!("R1[wp,wp](i={i},j={j})"), &rep.wp(i).commutator(rep.wp(j)));
            }
            report.check_zero(format!("R1[w,wp](i={i},j={j})"), &rep.w(i).commutator(rep.wp(j)));
        }
    }

    // (R2), (R3) conjugation of e_j, f_j by the group-likes
    for i in 1..n {
        for j in 1..n {
            let (a, b) = (pairing(i, j), pairing(i + 1, j));
            let c = params.monomial(a, b);
            let c_inv = params.monomial(-a, -b);
            report.check_eq(
                format!("R2[e](i={i},j={j})"),
                &rep.w(i).mul(rep.e(j)),
                &rep.e(j).mul(rep.w(i)).scale(&c),
            );
            report.check_eq(
                format!("R2[f](i={i},j={j})"),
                &rep.w(i).mul(rep.f(j)),
                &rep.f(j).mul(rep.w(i)).scale(&c_inv),
            );
            let c = params.monomial(b, a);
            let c_inv = params.monomial(-b, -a);
            report.check_eq(
                format!("R3[e](i={i},j={j})"),
                &rep.wp(i).mul(rep.e(j)),
                &rep.e(j).mul(rep.wp(i)).scale(&c),
            );
            report.check_eq(
                format!("R3[f](i={i},j={j})"),
                &rep.wp(i).mul(rep.f(j)),
                &rep.f(j).mul(rep.wp(i)).scale(&c_inv),
            );
        }
    }

    // (R4) [e_i, f_j] = δ_ij (ω_i − ω_i′) / (r − s)
    let r_minus_s_inv = (params.r() - params.s()).inv().expect("r ≠ s");
    for i in 1..n {
        for j in 1..n {
            let rhs = if i == j {
                rep.w(i).sub(rep.wp(i)).scale(&r_minus_s_inv)
            } else {
                Matrix::zeros(dim, dim)
            };
            report.check_eq(format!("R4(i={i},j={j})"), &rep.e(i).commutator(rep.f(j)), &rhs);
        }
    }

    // (R5) distant generators commute
    for i in 1..n {
        for j in (i + 2)..n {
            report.check_zero(format!("R5[e](i={i},j={j})"), &rep.e(i).commutator(rep.e(j)));
            report.check_zero(format!("R5[f](i={i},j={j})"), &rep.f(i).commutator(rep.f(j)));
        }
    }

    // (R6), (R7) Serre relations
    let (r, s) = (params.r(), params.s());
    let (r_inv, s_inv) = (r.inv().unwrap(), s.inv().unwrap());
    for i in 1..n.saturating_sub(1) {
        let serre = |x: &Matrix<P::F>, y: &Matrix<P::F>, sum: &P::F, prod: &P::F| {
            // x² y − sum·x y x + prod·y x², and x y² − sum·y x y + prod·y² x
            let first = x
                .mul(x)
                .mul(y)
                .axpy(&(-sum.clone()), &x.mul(y).mul(x))
                .axpy(prod, &y.mul(x).mul(x));
            let second = x
                .mul(y)
                .mul(y)
                .axpy(&(-sum.clone()), &y.mul(x).mul(y))
                .axpy(prod, &y.mul(y).mul(x));
            (first, second)
        };
        let (e1, e2) = serre(rep.e(i), rep.e(i + 1), &(r.clone() + &s), &(r.clone() * &s));
        report.check_zero(format!("R6[1](i={i})"), &e1);
        report.check_zero(format!("R6[2](i={i})"), &e2);
        let (f1, f2) = serre(rep.f(i), rep.f(i + 1), &(r_inv.clone() + &s_inv), &(r_inv.clone() * &s_inv));
        report.check_zero(format!("R7[1](i={i})"), &f1);
        report.check_zero(format!("R7[2](i={i})"), &f2);
    }
    report
}
