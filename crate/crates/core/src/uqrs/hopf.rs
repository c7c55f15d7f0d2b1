use alloc::format;

use super::Representation;
use crate::linalg::Matrix;
use crate::report::Report;
use crate::scalars::Scalar;

/// Checks the antipode axioms `m(S ⊗ id)Δ(x) = ε(x)·1 = m(id ⊗ S)Δ(x)` on
/// every generator, evaluated in `rep`, with
///
/// * `Δ(e_i) = e_i ⊗ 1 + ω_i ⊗ e_i`, `S(e_i) = −ω_i⁻¹ e_i`, `ε(e_i) = 0`
/// * `Δ(f_i) = 1 ⊗ f_i + f_i ⊗ ω_i′`, `S(f_i) = −f_i ω_i′⁻¹`, `ε(f_i) = 0`
/// * group-likes `Δ(ω) = ω ⊗ ω`, `S(ω) = ω⁻¹`, `ε(ω) = 1`.
pub fn hopf_antipode_check<F: Scalar>(rep: &Representation<F>) -> Report<F> {
    let dim = rep.dim();
    let id = Matrix::<F>::identity(dim);
    let zero = Matrix::<F>::zeros(dim, dim);
    let mut report = Report::new("hopf antipode");
    for i in 1..rep.n() {
        let (e, f) = (rep.e(i), rep.f(i));
        let (w, wp) = (rep.w(i), rep.wp(i));
        let (w_inv, wp_inv) = (rep.w_inv(i), rep.wp_inv(i));
        let s_e = w_inv.mul(e).neg();
        let s_f = f.mul(wp_inv).neg();

        // S(e)·1 + S(ω)·e  and  e·S(1) + ω·S(e)
        report.check_eq(format!("S*id(e{i})"), &s_e.add(&w_inv.mul(e)), &zero);
        report.check_eq(format!("id*S(e{i})"), &e.add(&w.mul(&s_e)), &zero);
        // S(1)·f + S(f)·ω′  and  1·S(f) + f·S(ω′)
        report.check_eq(format!("S*id(f{i})"), &f.add(&s_f.mul(wp)), &zero);
        report.check_eq(format!("id*S(f{i})"), &s_f.add(&f.mul(wp_inv)), &zero);
        for (name, g, g_inv) in [("w", w, w_inv), ("wp", wp, wp_inv)] {
            report.check_eq(format!("S*id({name}{i})"), &g_inv.mul(g), &id);
            report.check_eq(format!("id*S({name}{i})"), &g.mul(g_inv), &id);
        }
    }
    report
}
