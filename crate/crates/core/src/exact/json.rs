//! Canonical JSON forms. Integers are decimal strings, rationals are
//! `["num","den"]` pairs, and polynomials are `{"min_deg", "coeffs"}`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use super::{Integer, LaurentPolynomial, Polynomial, Rational, RationalFunction, UPolynomial};
use crate::error::{Error, Result};

pub fn integer_to_json(x: &Integer) -> Value {
    Value::String(x.to_string())
}

pub fn integer_from_json(v: &Value) -> Result<Integer> {
    match v {
        Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("bad integer `{s}`"))),
        Value::Number(n) => n
            .as_i64()
            .map(Integer::from)
            .ok_or_else(|| Error::Parse(format!("bad integer {n}"))),
        _ => Err(Error::Parse(format!("expected integer, got {v}"))),
    }
}

pub fn rational_to_json(x: &Rational) -> Value {
    json!([x.numer().to_string(), x.denom().to_string()])
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    let pair = v.as_array().filter(|a| a.len() == 2).ok_or_else(|| {
        Error::Parse(format!("expected [num, den] pair, got {v}"))
    })?;
    let n = integer_from_json(&pair[0])?;
    let d = integer_from_json(&pair[1])?;
    if d == Integer::from(0) {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Rational::new(n, d))
}

#[derive(Serialize, Deserialize)]
struct RawPoly {
    min_deg: i64,
    coeffs: Vec<(String, String)>,
}

impl RawPoly {
    fn from_laurent(p: &LaurentPolynomial) -> Self {
        RawPoly {
            min_deg: p.min_deg(),
            coeffs: p
                .coeffs()
                .iter()
                .map(|c| (c.numer().to_string(), c.denom().to_string()))
                .collect(),
        }
    }

    fn into_laurent(self) -> Result<LaurentPolynomial> {
        let coeffs = self
            .coeffs
            .into_iter()
            .map(|(n, d)| rational_from_json(&json!([n, d])))
            .collect::<Result<Vec<_>>>()?;
        Ok(LaurentPolynomial::new(self.min_deg, coeffs))
    }
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawPoly::from_laurent(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        RawPoly::deserialize(d)?.into_laurent().map_err(D::Error::custom)
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LaurentPolynomial::from(self.clone()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        LaurentPolynomial::deserialize(d)?
            .to_polynomial()
            .ok_or_else(|| D::Error::custom("negative exponent in polynomial"))
    }
}

#[derive(Serialize, Deserialize)]
struct RawRatFunc {
    num: Polynomial,
    den: Polynomial,
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawRatFunc { num: self.numer().clone(), den: self.denom().clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawRatFunc::deserialize(d)?;
        RationalFunction::new(raw.num, raw.den).map_err(D::Error::custom)
    }
}

impl Serialize for UPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs().serialize(s)
    }
}

impl<'de> Deserialize<'de> for UPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(UPolynomial::new(Vec::<RationalFunction>::deserialize(d)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn polynomial_json_shape() {
        let p = Polynomial::from_i64s(&[0, 0, 3, -1]);
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(v, json!({"min_deg": 2, "coeffs": [["3", "1"], ["-1", "1"]]}));
        let back: Polynomial = serde_json::from_value(v).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn rational_function_round_trip() {
        let f = RationalFunction::new(Polynomial::from_i64s(&[1, 0, -1]), Polynomial::from_i64s(&[2, -2]))
            .unwrap();
        let s = serde_json::to_string(&f).unwrap();
        let back: RationalFunction = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn rationals_and_integers() {
        assert_eq!(rational_to_json(&rat(-3, 6)), json!(["-1", "2"]));
        assert_eq!(rational_from_json(&json!(["4", "-6"])).unwrap(), rat(-2, 3));
        assert!(rational_from_json(&json!(["1", "0"])).is_err());
        let big: Integer = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(integer_from_json(&integer_to_json(&big)).unwrap(), big);
    }
}
