use std::fmt;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// An exact rational quantity. Integers serialize as JSON numbers, proper
/// fractions as `"p/q"` strings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exact(pub Ratio<i64>);

impl Exact {
    pub fn int(v: i64) -> Self {
        Exact(Ratio::from_integer(v))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Exact(Ratio::new(num, den))
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl From<usize> for Exact {
    fn from(v: usize) -> Self {
        Exact::int(v as i64)
    }
}

impl std::ops::Add for Exact {
    type Output = Exact;
    fn add(self, o: Exact) -> Exact {
        Exact(self.0 + o.0)
    }
}

impl std::ops::Sub for Exact {
    type Output = Exact;
    fn sub(self, o: Exact) -> Exact {
        Exact(self.0 - o.0)
    }
}

impl std::ops::Mul for Exact {
    type Output = Exact;
    fn mul(self, o: Exact) -> Exact {
        Exact(self.0 * o.0)
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            s.serialize_i64(*self.0.numer())
        } else {
            s.serialize_str(&self.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(Exact::int(v)),
            Raw::Text(t) => {
                let (p, q) = t.split_once('/').ok_or_else(|| de::Error::custom(format!("bad rational `{t}`")))?;
                let p: i64 = p.trim().parse().map_err(de::Error::custom)?;
                let q: i64 = q.trim().parse().map_err(de::Error::custom)?;
                if q == 0 {
                    return Err(de::Error::custom("zero denominator"));
                }
                Ok(Exact::ratio(p, q))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn serde_forms() {
        let v = vec![Exact::int(3), Exact::ratio(3, 2), Exact::ratio(4, 2)];
        let js = serde_json::to_string(&v).unwrap();
        assert_eq!(js, r#"[3,"3/2",2]"#);
        let back: Vec<Exact> = serde_json::from_str(&js).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<Exact>(r#""1/0""#).is_err());
    }
}
