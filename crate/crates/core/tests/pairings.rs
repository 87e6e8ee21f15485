use std::collections::BTreeSet;

use sympair::pairings::*;
use sympair::rational::{factorial_rat, pow_rat, rat, ratio, two_pow, Rational};
use sympair::series::ScalarSeries;
use sympair::symcore::{partitions_of, specialize_ex, Basis, Partition, SymFn};

fn p(parts: &[u32]) -> Partition {
    Partition::from_parts(parts.iter().copied())
}

fn sum(terms: &[(i64, &[u32])], basis: Basis) -> SymFn {
    SymFn::from_terms(basis, terms.iter().map(|(c, l)| (p(l), rat(*c))))
}

#[test]
fn genus_three_xi_polynomial() {
    let four = cn_xi(3, 3).unwrap().data.scale(&rat(4));
    let expected = sum(
        &[
            (14, &[1, 1, 1, 1, 1, 1]),
            (17, &[2, 1, 1, 1, 1]),
            (26, &[2, 2, 1, 1]),
            (28, &[2, 2, 2]),
            (9, &[3, 1, 1, 1]),
            (12, &[3, 2, 1]),
            (6, &[3, 3]),
            (6, &[4, 1, 1]),
            (3, &[4, 2]),
        ],
        Basis::M,
    );
    assert_eq!(four, expected);
}

#[test]
fn genus_four_xi_in_e_basis() {
    let cn = cn_xi(4, 4).unwrap();
    let eight = cn.in_basis(Basis::E).scale(&rat(8));
    let expected = sum(
        &[
            (-4, &[2, 2, 2, 1, 1, 1]),
            (18, &[3, 2, 2, 1, 1]),
            (-44, &[3, 3, 2, 1]),
            (65, &[3, 3, 3]),
            (36, &[4, 2, 1, 1, 1]),
            (-100, &[4, 3, 1, 1]),
            (-44, &[5, 2, 1, 1]),
            (150, &[5, 3, 1]),
            (-20, &[6, 1, 1, 1]),
            (27, &[7, 1, 1]),
        ],
        Basis::E,
    );
    assert_eq!(eight, expected);
    assert_eq!(cn.nonzero_count(), 26);
    let five = cn_xi(5, 5).unwrap();
    assert_eq!(five.nonzero_count(), 70);
    assert_eq!(five.in_basis(Basis::E).len(), 20);
}

#[test]
fn genus_three_delta_polynomial() {
    let expected = sum(
        &[
            (14336, &[1, 1, 1, 1, 1, 1]),
            (6464, &[2, 1, 1, 1, 1]),
            (2936, &[2, 2, 1, 1]),
            (1339, &[2, 2, 2]),
            (1568, &[3, 1, 1, 1]),
            (722, &[3, 2, 1]),
            (182, &[3, 3]),
            (212, &[4, 1, 1]),
            (98, &[4, 2]),
            (14, &[5, 1]),
        ],
        Basis::M,
    );
    assert_eq!(cn_delta(3, 3).unwrap().data, expected);
    assert_eq!(delta_pairing(3, 3, &p(&[2, 2, 2]), 0).unwrap(), rat(1339));
}

#[test]
fn delta_polynomials_have_full_support() {
    for (g, n) in [(4, 28), (5, 73)] {
        let cn = cn_delta(g, g).unwrap();
        assert_eq!(cn.nonzero_count(), n, "m basis, g = {g}");
        assert_eq!(cn.in_basis(Basis::E).len(), n, "e basis, g = {g}");
    }
}

#[test]
fn large_single_pairing() {
    let v = delta_pairing(6, 6, &p(&[8, 2]), 5).unwrap();
    assert_eq!(v, rat(117071517415));
    let abc = class_in_abc(6, 2, ClassKind::Delta)
        .unwrap()
        .mul(&class_in_abc(6, 8, ClassKind::Delta).unwrap())
        .mul(&AbcPoly::monomial(5, 0, 0, rat(1)));
    assert_eq!(abc.evaluate(6).unwrap(), v);
}

#[test]
fn delta_six_eight_expansion() {
    let d = class_in_abc(6, 8, ClassKind::Delta).unwrap();
    let expected = [
        ((8, 0, 0), ratio(3184129, 10321920)),
        ((6, 1, 0), ratio(-351163, 368640)),
        ((4, 2, 0), ratio(747229, 737280)),
        ((5, 0, 1), ratio(3539, 23040)),
        ((2, 3, 0), ratio(-1044149, 2580480)),
        ((3, 1, 1), ratio(-1061, 3840)),
        ((0, 4, 0), ratio(1155, 32768)),
        ((1, 2, 1), ratio(18829, 161280)),
        ((2, 0, 2), ratio(13, 576)),
        ((0, 1, 2), ratio(-31, 2880)),
    ];
    let mut poly = AbcPoly::zero();
    for ((i, j, k), c) in expected {
        poly.add_term(i, j, k, c);
    }
    assert_eq!(d, poly);
}

#[test]
fn two_routes_agree() {
    for g in 2..=4u32 {
        let classes: Vec<AbcPoly> = (0..=3 * g - 3)
            .map(|i| {
                if i == 0 {
                    AbcPoly::one()
                } else {
                    class_in_abc(g, i, ClassKind::Delta).unwrap()
                }
            })
            .collect();
        for l in partitions_of(3 * g - 3, None, None) {
            let monomial = l
                .parts()
                .iter()
                .fold(AbcPoly::one(), |acc, &i| acc.mul(&classes[i as usize]));
            assert_eq!(
                monomial.evaluate(g).unwrap(),
                delta_pairing(g, g, &l, 0).unwrap(),
                "g = {g}, λ = {l}"
            );
        }
    }
}

#[test]
fn tangent_numbers_match_abc_route() {
    for g in 2..=3u32 {
        let cn = cn_tangent(g).unwrap();
        let classes: Vec<AbcPoly> = (0..=3 * g - 3)
            .map(|i| class_in_abc(g, i, ClassKind::Tangent).unwrap())
            .collect();
        for l in partitions_of(3 * g - 3, None, None) {
            let monomial = l
                .parts()
                .iter()
                .fold(AbcPoly::one(), |acc, &i| acc.mul(&classes[i as usize]));
            assert_eq!(
                monomial.evaluate(g).unwrap(),
                cn.coeff(&l),
                "g = {g}, λ = {l}"
            );
        }
    }
}

#[test]
fn tangent_numbers_are_even() {
    for g in 2..=5u32 {
        let cn = cn_tangent(g).unwrap();
        for (l, c) in cn.data.iter() {
            assert!(c.is_integer(), "g = {g}, λ = {l}");
            assert!((c.numer() % 2u32) == 0u32.into(), "g = {g}, λ = {l}: {c}");
        }
    }
}

#[test]
fn tangent_ex_closed_form() {
    // c_1^{3g-3}[N_g] = (3g-3)! (-2)^{3g-3} Coeff_{T^{g-1}} √T/(sinh√T cosh√T),
    // and ex(CN) = c_1^{3g-3}[N_g] / (3g-3)!
    let t = 5;
    let closed = ScalarSeries::sinh_sqrt_over_sqrt(t)
        .mul(&ScalarSeries::cosh_sqrt(t))
        .reciprocal();
    for g in 2..=4u32 {
        let cn = cn_tangent(g).unwrap();
        let ex = specialize_ex(&cn.data).as_constant().unwrap();
        let n = 3 * g - 3;
        let expected = closed.coeff(g as usize - 1) * pow_rat(&rat(-2), n);
        assert_eq!(ex, expected, "g = {g}");
    }
}

#[test]
fn newstead_top_powers_from_ex() {
    // c1 = 2α, so c1^{3g-3}[N_g] = 2^{3g-3} α^{3g-3}[N_g]
    for (g, a) in [(2u32, 4i64), (3, 224)] {
        let n = 3 * g - 3;
        assert_eq!(pairing_ab(g, n, 0).unwrap(), rat(a));
        let c = cn_tangent(g).unwrap().coeff(&Partition::ones(n));
        assert_eq!(c, two_pow(n) * rat(a));
    }
}

#[test]
fn a1_powers_from_z_polynomial() {
    for g in 2..=4u32 {
        let n = 4 * g - 3;
        let z = cn_z(g, g).unwrap().coeff(&Partition::ones(n));
        let a1 = z * pow_rat(&rat(-2), n);
        let b = bernoulli(2 * g as usize - 2);
        let expected = factorial_rat(n) / factorial_rat(2 * g - 2)
            * two_pow(2 * g - 2)
            * (two_pow(2 * g - 2) - rat(2))
            * b.clone()
            * if b < Rational::from_integer(0.into()) {
                rat(-1)
            } else {
                rat(1)
            };
        assert_eq!(a1, expected, "g = {g}");
    }
}

#[test]
fn z_ex_specialization() {
    // z_1^{4g-3}[M_g] = (4g-3)! (-1)^g / 2^{2g-1} Coeff_{T^{g-1}} √T/sinh√T,
    // and ex(CN) = z_1^{4g-3}[M_g] / (4g-3)!
    let t = 5;
    let inv = ScalarSeries::sinh_sqrt_over_sqrt(t).reciprocal();
    for g in 1..=4u32 {
        let cn = cn_z(g, g).unwrap();
        let ex = specialize_ex(&cn.data).as_constant().unwrap();
        let sign = if g % 2 == 0 { rat(1) } else { rat(-1) };
        let expected = sign / two_pow(2 * g - 1) * inv.coeff(g as usize - 1);
        assert_eq!(ex, expected, "g = {g}");
    }
}

#[test]
fn genus_recursion() {
    // ξ_1^{3k-3-i} ξ_i [N_k] does not depend on the ambient genus for i <= 1,
    // the part seen by a specialization sending R(T) to 1
    for k in 1..=3u32 {
        let base = cn_xi(k, k).unwrap();
        for g in k..=k + 3 {
            let cn = cn_xi(g, k).unwrap();
            for i in 0..=1.min(3 * k - 3) {
                let l = Partition::ones(3 * k - 3 - i).union(&Partition::from_parts([i]));
                assert_eq!(cn.coeff(&l), base.coeff(&l), "g = {g}, k = {k}, i = {i}");
            }
        }
    }
}

#[test]
fn genus_recursion_breaks_for_larger_index() {
    // ex-bar sends R(T) to 1 - x^2 T rather than 1, so ξ_1 ξ_2 [N_2] moves with g
    assert_eq!(cn_xi(2, 2).unwrap().coeff(&p(&[2, 1])), rat(-1));
    assert_eq!(cn_xi(3, 2).unwrap().coeff(&p(&[2, 1])), ratio(-3, 2));
}

#[test]
fn beta_powers_vanish() {
    for g in [3u32, 5] {
        for j in g..=(3 * g - 3) / 2 {
            let i = 3 * g - 3 - 2 * j;
            assert_eq!(pairing_ab(g, i, j).unwrap(), rat(0), "g = {g}, j = {j}");
        }
        for j in 0..=(3 * g - 3) / 2 {
            for k in 0..=(3 * g - 3 - 2 * j) / 3 {
                let i = 3 * g - 3 - 2 * j - 3 * k;
                if j + k >= g {
                    assert_eq!(pairing_newstead(g, i, j, k).unwrap(), rat(0));
                }
            }
        }
    }
}

#[test]
fn alpha_power_divisibility() {
    // α^g times any completing δ monomial pairs to an even integer
    for g in 2..=5u32 {
        let rest = 2 * g - 3;
        for l in partitions_of(rest, None, None) {
            let v = delta_pairing(g, g, &l, g).unwrap();
            assert!(v.is_integer());
            assert!(v.numer() % 2u32 == 0u32.into(), "g = {g}, λ = {l}: {v}");
        }
    }
}

#[test]
fn xi_pair_parities() {
    // 2^{g-1} ξ_1^{3g-3-j} ξ_j [N_g] is an integer
    for g in 2..=6u32 {
        let cn = cn_xi(g, g).unwrap();
        for j in 1..=3 * g - 3 {
            let l = Partition::ones(3 * g - 3 - j).union(&Partition::from_parts([j]));
            let v = cn.coeff(&l) * two_pow(g - 1);
            assert!(v.is_integer(), "g = {g}, j = {j}");
        }
    }
}

#[test]
fn xipair_through_genus_five() {
    for g in 1..=5 {
        assert!(xipair_identity(g).unwrap().holds, "g = {g}");
    }
}

#[test]
fn vanishing_examples() {
    let s = |v: &[u32]| v.iter().copied().collect::<BTreeSet<u32>>();
    assert!(psi_classes_vanish(2, &s(&[1])).unwrap());
    assert!(!psi_classes_vanish(2, &s(&[1, 3])).unwrap());
    assert!(b_classes_vanish(2, &s(&[1]), &s(&[1])).unwrap());
}

#[test]
fn b1_report_records_discrepancies() {
    let r = b1_pairing(2, 2, 1, &p(&[2, 2]), true).unwrap();
    assert!(r.dimension_degree_ok);
    assert!(!r.discrepancies.is_empty());
    let zero = b1_pairing(3, 2, 0, &p(&[3, 2]), true).unwrap();
    assert_eq!(zero.as_printed, Some(rat(0)));
    assert_eq!(zero.mg_route, Some(cn_z(3, 2).unwrap().coeff(&p(&[3, 2]))));
}

#[test]
fn handle_collapse_uses_lower_genus() {
    let l = p(&[3, 2]);
    assert_eq!(
        mrec_prediction(3, &l).unwrap(),
        cn_z(3, 2).unwrap().coeff(&l)
    );
    assert!(mrec_prediction(3, &p(&[3])).is_err());
}

/// Power series in `T` (outer) and `x` (inner), truncated in both.
fn bi_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let (nt, nx) = (a.len(), a[0].len());
    let mut out = vec![vec![rat(0); nx]; nt];
    for i in 0..nt {
        for j in 0..nx {
            for k in 0..nt - i {
                for l in 0..nx - j {
                    out[i + k][j + l] += &a[i][j] * &b[k][l];
                }
            }
        }
    }
    out
}

fn bi_reciprocal(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    // a = a00 (1 - r), 1/a = Σ r^n / a00
    let (nt, nx) = (a.len(), a[0].len());
    let a00 = a[0][0].clone();
    let mut r = vec![vec![rat(0); nx]; nt];
    for i in 0..nt {
        for j in 0..nx {
            if i + j > 0 {
                r[i][j] = -&a[i][j] / &a00;
            }
        }
    }
    let mut one = vec![vec![rat(0); nx]; nt];
    one[0][0] = rat(1);
    let mut acc = one.clone();
    let mut power = one;
    for _ in 0..nt + nx {
        power = bi_mul(&power, &r);
        for i in 0..nt {
            for j in 0..nx {
                acc[i][j] += &power[i][j];
            }
        }
    }
    acc.iter()
        .map(|row| row.iter().map(|c| c / &a00).collect())
        .collect()
}

#[test]
fn xi_exbar_closed_form() {
    // ξ_1^{3g-3-i} ξ_i [N_g] = (3g-3-i)!/2^{g-1} Coeff_{x^i T^{g-1}} (1+x-x²T)^g / (x cosh√T + sinh√T/√T)
    let nt = 4;
    for g in 2..=4u32 {
        let n = 3 * g - 3;
        let nx = n as usize + 1;
        let mut base = vec![vec![rat(0); nx]; nt];
        base[0][0] = rat(1);
        base[0][1] = rat(1);
        base[1][2] = rat(-1);
        let mut num = vec![vec![rat(0); nx]; nt];
        num[0][0] = rat(1);
        for _ in 0..g {
            num = bi_mul(&num, &base);
        }
        let mut den = vec![vec![rat(0); nx]; nt];
        for t in 0..nt {
            den[t][1] = rat(1) / factorial_rat(2 * t as u32);
            den[t][0] = rat(1) / factorial_rat(2 * t as u32 + 1);
        }
        let series = bi_mul(&num, &bi_reciprocal(&den));
        let cn = cn_xi(g, g).unwrap();
        for i in 1..=n {
            let l = Partition::ones(n - i).union(&Partition::from_parts([i]));
            let expected =
                factorial_rat(n - i) / two_pow(g - 1) * &series[g as usize - 1][i as usize];
            assert_eq!(cn.coeff(&l), expected, "g = {g}, i = {i}");
        }
    }
}
