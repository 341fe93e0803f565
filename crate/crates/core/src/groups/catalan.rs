
use super::ReflectionGroupData;
use crate::exact::{q_int, Polynomial, Rational, RationalFunction};

fn ratio(a: i64, d: u64) -> RationalFunction {
    let den = RationalFunction::from(Polynomial::q_integer(d as usize));
    RationalFunction::from(q_int(a)).checked_div(&den).expect("[d]_q is nonzero for d >= 1")
}

/// `Cat_k(W, q) = prod [k + d_i - 1]_q / [d_i]_q`.
pub fn catalan_q(w: &ReflectionGroupData, k: i64) -> RationalFunction {
    w.degrees.iter().map(|&d| ratio(k + d as i64 - 1, d)).product()
}

/// `Cat*_k(W, q) = q^N prod [k - d*_i - 1]_q / [d_i]_q`.
pub fn catalan_star_q(w: &ReflectionGroupData, k: i64) -> RationalFunction {
    let body: RationalFunction = w
        .degrees
        .iter()
        .zip(&w.codegrees)
        .map(|(&d, &c)| ratio(k - c as i64 - 1, d))
        .product();
    &body * &RationalFunction::q_pow(w.n_hyperplanes as i64)
}

/// `Cat_k(W, 1) = prod (k + d_i - 1) / d_i`.
pub fn catalan_at_one(w: &ReflectionGroupData, k: i64) -> Rational {
    w.degrees.iter().map(|&d| Rational::new((k + d as i64 - 1).into(), d.into())).product()
}

/// `Cat*_k(W, 1) = prod (k - d*_i - 1) / d_i`.
pub fn catalan_star_at_one(w: &ReflectionGroupData, k: i64) -> Rational {
    w.degrees
        .iter()
        .zip(&w.codegrees)
        .map(|(&d, &c)| Rational::new((k - c as i64 - 1).into(), d.into()))
        .product()
}

/// Compare the definition of `Cat*_k` against
/// `prod (q^{d*_i + 1} - q^k) / (1 - q^{d_i})`, which pins `N = sum (d*_i + 1)`.
pub fn catalan_star_identity_check(w: &ReflectionGroupData, k: i64) -> bool {
    let product: RationalFunction = w
        .degrees
        .iter()
        .zip(&w.codegrees)
        .map(|(&d, &c)| {
            let num = &RationalFunction::q_pow(c as i64 + 1) - &RationalFunction::q_pow(k);
            let den = RationalFunction::from(Polynomial::one_minus_q_pow(d as usize));
            num.checked_div(&den).expect("nonzero denominator")
        })
        .product();
    product == catalan_star_q(w, k)
}

/// Whether the q-Catalan value is a polynomial (zero counts).
pub fn is_polynomial_value(f: &RationalFunction) -> bool {
    f.is_zero() || f.as_polynomial().is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::groups::group;

    #[test]
    fn first_catalan_is_one() {
        for label in ["S4", "G(3,1,2)", "D6", "G23", "C5"] {
            let w = group(label).unwrap();
            assert!(catalan_q(&w, 1).is_one(), "{label}");
            assert!(catalan_star_q(&w, 1).is_zero(), "{label}");
        }
    }

    #[test]
    fn classical_values() {
        let s3 = group("S3").unwrap();
        assert_eq!(catalan_at_one(&s3, 4), int(5));
        assert_eq!(catalan_q(&s3, 4).value_at(&int(1)).unwrap(), int(5));
        // Cat_{h+1}(S_n) is the ordinary Catalan number
        assert_eq!(catalan_at_one(&group("S5").unwrap(), 6), int(42));
    }

    #[test]
    fn dual_identity() {
        assert!(catalan_star_identity_check(&group("S4").unwrap(), 5));
        assert!(catalan_star_identity_check(&group("D6").unwrap(), 5));
        assert!(catalan_star_identity_check(&group("G37").unwrap(), 1));
    }
}
