//! Step-by-step recomputation of `{B G_2}`, `{B Spin_7}` and `{B Spin_8}`
//! through the stratifications of their standard representations.
//!
//! Every intermediate identity becomes one [`Check`], with both sides rendered.

use crate::lefschetz::LefschetzClass;
use crate::report::{Check, CheckReport};

use super::classes::{class_g2, class_gl, class_sl, class_spin, strat_equation};
use super::MotiveExpr;

fn l(k: i64) -> LefschetzClass {
    LefschetzClass::l_pow(k)
}

fn lm1(n: u64) -> LefschetzClass {
    LefschetzClass::l_pow_minus_one(n)
}

fn inv(x: &LefschetzClass) -> LefschetzClass {
    x.inv().expect("ledger factors are units")
}

fn prod<const N: usize>(xs: [LefschetzClass; N]) -> LefschetzClass {
    xs.into_iter().product()
}

fn int(n: i64) -> LefschetzClass {
    LefschetzClass::integer(n)
}

/// `strat_equation` restricted to scalar inputs.
fn strat(n: u32, null_cone: &LefschetzClass, quadric: &LefschetzClass) -> LefschetzClass {
    strat_equation(n, &MotiveExpr::scalar(null_cone.clone()), &MotiveExpr::scalar(quadric.clone()))
        .scalar_part()
        .clone()
}

fn eq(id: &str, detail: &str, lhs: &LefschetzClass, rhs: &LefschetzClass) -> Check {
    debug_assert_eq!(lhs == rhs, lhs.eq_by_cross_multiplication(rhs));
    Check::equal(id, detail, lhs, rhs)
}

/// The ten strata of `V ⊕ V` under `U ⋊ μ_2`, each as
/// `(label, class computed from orbit space and stabilizer, displayed term)`.
/// The eighth stratum is `(L-1)·x` with `x = {B(U⋊μ_2)}` unknown and is
/// returned separately.
fn u_mu2_strata() -> Vec<(&'static str, LefschetzClass, LefschetzClass)> {
    let gm = lm1(1);
    let ga = l(1);
    let b_ga = l(-1);
    let b_u = l(-3);
    let b_mu2 = LefschetzClass::one();
    let b_ga_mu2 = l(-1);
    let gm2 = gm.pow(2).unwrap();
    vec![
        ("s01", &gm2 * &b_ga, &gm2 * &l(-1)),
        ("s02", prod([gm2.clone(), ga.clone(), b_ga.clone()]), gm2.clone()),
        ("s03", &gm2 * &b_ga.pow(2).unwrap(), &gm2 * &l(-2)),
        ("s04", &lm1(3) * &b_u, &lm1(3) * &l(-3)),
        ("s05", &gm2 * &b_u, &gm2 * &l(-3)),
        ("s06", &gm2 * &b_ga, &gm2 * &l(-1)),
        ("s07", &ga * &gm2, &gm2 * &l(1)),
        ("s09", &gm * &b_ga_mu2, &gm * &l(-1)),
        ("s10", prod([ga.clone(), gm.clone(), b_mu2]), &l(1) * &gm),
    ]
}

pub fn verify_g2_ledger() -> CheckReport {
    let mut r = CheckReport::new("g2", 0);

    // Class formulas.
    let gl2 = class_gl(2);
    let sl2 = class_sl(2);
    r.push(eq("g2.formula.sl2", "{SL_2} = L(L^2-1)", &sl2, &(&l(1) * &lm1(2))));
    let g2_product = prod([l(14), &int(1) - &l(-2), &int(1) - &l(-6)]);
    r.push(eq("g2.formula.g2", "L^14(1-L^-2)(1-L^-6) = L^6(L^2-1)(L^6-1)", &g2_product, &class_g2()));

    // Null cone of the 7-dimensional representation.
    let c7 = prod([lm1(1), l(-5), inv(&gl2)]);
    let c7_expected = &l(-6) * &inv(&lm1(2));
    r.push(eq("g2.c7", "(L-1) L^-5 {GL_2}^-1 = L^-6 (L^2-1)^-1", &c7, &c7_expected));

    // Strata used for B(U ⋊ μ_2).
    let strata = u_mu2_strata();
    for (label, from_structure, displayed) in &strata {
        r.push(eq(
            &format!("g2.u_mu2.{label}"),
            "stratum class from orbit space and stabilizer matches the displayed term",
            from_structure,
            displayed,
        ));
    }
    let nine: LefschetzClass = strata.iter().map(|(_, _, t)| t.clone()).sum();
    let target = &(&l(6) - &l(1)) * &l(-3);
    r.push(eq("g2.u_mu2.sum", "S1+...+S7+S9+S10 = (L^6-L) L^-3", &nine, &target));
    let b_u_mu2 = &nine * &inv(&(&l(6) - &l(1)));
    r.push(eq("g2.u_mu2.value", "{B(U x| mu_2)} = L^-3", &b_u_mu2, &l(-3)));
    let s8 = &lm1(1) * &b_u_mu2;
    let all_ten = &nine + &s8;
    r.push(eq("g2.u_mu2.total", "S1+...+S10 = (L^6-1) L^-3", &all_ten, &(&lm1(6) * &l(-3))));

    // The order-8 quotient: classes on C_4, D_4, B_4.
    let c4 = &(&int(2) * &l(-1)) + &(&(&l(1) - &int(2)) * &l(-1));
    r.push(eq("g2.h.c4", "2L^-1 + (L-2)L^-1 = 1", &c4, &LefschetzClass::one()));
    let d4 = l(-1);
    let b_h_prime = LefschetzClass::one();
    let b4 = &lm1(1) * &b_h_prime;
    r.push(eq("g2.h.b4", "(L-1){B H'} = L-1", &b4, &lm1(1)));
    let b_h = strat(4, &(&c4 + &d4), &b_h_prime);
    let b_h_display = &inv(&lm1(4)) * &(&(&int(1) + &l(-1)) + &lm1(1));
    r.push(eq("g2.h.chain", "(L^4-1)^-1 (1 + L^-1 + (L-1)) as assembled", &b_h, &b_h_display));
    r.push(eq("g2.h.value", "{BH} = L^-1 (L^2-1)^-1", &b_h, &(&l(-1) * &inv(&lm1(2)))));

    // The stabilizer of the null-cone point in the 6-dimensional representation.
    let d6 = &inv(&sl2) * &l(-2);
    r.push(eq("g2.g.d6", "{SL_2}^-1 L^-2 = L^-3 (L^2-1)^-1", &d6, &(&l(-3) * &inv(&lm1(2)))));
    let c6 = b_u_mu2.clone();
    let b_g = strat(6, &(&c6 + &d6), &b_h);
    let b_g_mid = prod([
        inv(&lm1(6)),
        l(-3),
        inv(&lm1(2)),
        &(&lm1(2) + &int(1)) + &(&lm1(1) * &l(2)),
    ]);
    r.push(eq("g2.g.factored", "(L^6-1)^-1 L^-3 (L^2-1)^-1 (L^2-1+1+(L-1)L^2)", &b_g, &b_g_mid));
    r.push(eq("g2.g.value", "{BG} = (L^6-1)^-1 (L^2-1)^-1", &b_g, &(&inv(&lm1(6)) * &inv(&lm1(2)))));

    // Final assembly for G_2.
    let b_g2 = strat(7, &c7, &b_g);
    let b_g2_mid = prod([
        inv(&lm1(7)),
        l(-6),
        inv(&lm1(6)),
        inv(&lm1(2)),
        &lm1(6) + &(&lm1(1) * &l(6)),
    ]);
    r.push(eq("g2.main.factored", "(L^7-1)^-1 L^-6 (L^6-1)^-1 (L^2-1)^-1 (L^6-1+(L-1)L^6)", &b_g2, &b_g2_mid));
    let b_g2_value = prod([l(-6), inv(&lm1(6)), inv(&lm1(2))]);
    r.push(eq("g2.main.value", "{B G_2} = L^-6 (L^6-1)^-1 (L^2-1)^-1", &b_g2, &b_g2_value));
    r.push(eq("g2.main.inverse", "{B G_2} = {G_2}^-1", &b_g2, &inv(&class_g2())));
    r.push(eq("g2.main.product", "{B G_2} {G_2} = 1", &(&b_g2 * &class_g2()), &LefschetzClass::one()));
    r.sorted()
}

/// `{B G_2}` as assembled in [`verify_g2_ledger`].
pub fn b_g2_value() -> LefschetzClass {
    prod([l(-6), inv(&lm1(6)), inv(&lm1(2))])
}

pub fn verify_spin78_ledger() -> CheckReport {
    let mut r = CheckReport::new("spin78", 0);

    let sl3 = class_sl(3);
    r.push(eq("spin78.formula.sl3", "{SL_3} = L^3 (L^3-1)(L^2-1)", &sl3, &prod([l(3), lm1(3), lm1(2)])));

    // Spin_7 acting on the 8-dimensional spin representation.
    let c8_spin7 = &l(-6) * &inv(&sl3);
    r.push(eq(
        "spin78.spin7.c8",
        "{B H} {SL_3}^-1 = L^-9 (L^3-1)^-1 (L^2-1)^-1",
        &c8_spin7,
        &prod([l(-9), inv(&lm1(3)), inv(&lm1(2))]),
    ));
    let q8_spin7 = &b_g2_value() * &LefschetzClass::one();
    r.push(eq(
        "spin78.spin7.q8",
        "{B(G_2 x mu_2)} = L^-6 (L^6-1)^-1 (L^2-1)^-1",
        &q8_spin7,
        &inv(&class_g2()),
    ));
    let b_spin7 = strat(8, &c8_spin7, &q8_spin7);
    let mid = prod([
        inv(&lm1(8)),
        l(-9),
        inv(&lm1(2)),
        inv(&lm1(6)),
        &(&l(3) + &int(1)) + &(&lm1(1) * &l(3)),
    ]);
    r.push(eq("spin78.spin7.factored", "(L^8-1)^-1 L^-9 (L^2-1)^-1 (L^6-1)^-1 ((L^3+1)+(L-1)L^3)", &b_spin7, &mid));
    let spin7_value = prod([l(-9), inv(&lm1(2)), inv(&lm1(4)), inv(&lm1(6))]);
    r.push(eq("spin78.spin7.value", "{B Spin_7} = L^-9 (L^2-1)^-1 (L^4-1)^-1 (L^6-1)^-1", &b_spin7, &spin7_value));
    r.push(eq("spin78.spin7.product", "{B Spin_7} {Spin_7} = 1", &(&b_spin7 * &class_spin(7)), &LefschetzClass::one()));

    // Spin_8 acting on the 8-dimensional vector representation.
    let q8_spin8 = b_spin7.clone();
    r.push(eq("spin78.spin8.q8", "{B(Spin_7 x mu_2)} = L^-9 (L^2-1)^-1 (L^4-1)^-1 (L^6-1)^-1", &q8_spin8, &spin7_value));
    let b_spin6 = inv(&class_spin(6));
    let c8_spin8 = &l(-6) * &b_spin6;
    r.push(eq(
        "spin78.spin8.c8",
        "L^-6 {B Spin_6} = L^-12 (L^3-1)^-1 (L^2-1)^-1 (L^4-1)^-1",
        &c8_spin8,
        &prod([l(-12), inv(&lm1(3)), inv(&lm1(2)), inv(&lm1(4))]),
    ));
    let b_spin8 = strat(8, &c8_spin8, &q8_spin8);
    r.push(eq("spin78.spin8.value", "{B Spin_8} = {Spin_8}^-1", &b_spin8, &inv(&class_spin(8))));
    r.push(eq("spin78.spin8.product", "{B Spin_8} {Spin_8} = 1", &(&b_spin8 * &class_spin(8)), &LefschetzClass::one()));
    r.sorted()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_ledger_passes() {
        let r = verify_g2_ledger();
        assert!(r.all_passed(), "{}", r.to_text());
        assert!(r.checks.len() >= 20);
    }

    #[test]
    fn spin78_ledger_passes() {
        let r = verify_spin78_ledger();
        assert!(r.all_passed(), "{}", r.to_text());
    }
}
