//! Tensor words such as `E^2*Ebar` naming mixed tensor powers.

use std::fmt;
use std::str::FromStr;

use super::RepError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    E,
    Ebar,
}

impl Factor {
    pub fn name(&self) -> &'static str {
        match self {
            Factor::E => "E",
            Factor::Ebar => "Ebar",
        }
    }
}

/// An ordered tensor product of `E` and `Ebar` factors; empty is the trivial module.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorWord(pub Vec<Factor>);

impl TensorWord {
    pub fn trivial() -> Self {
        TensorWord(Vec::new())
    }

    /// `E^k ⊗ Ebar^l`.
    pub fn block(k: usize, l: usize) -> Self {
        let mut f = vec![Factor::E; k];
        f.extend(std::iter::repeat(Factor::Ebar).take(l));
        TensorWord(f)
    }

    pub fn power(f: Factor, k: usize) -> Self {
        TensorWord(vec![f; k])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of `E` and `Ebar` factors.
    pub fn bidegree(&self) -> (usize, usize) {
        let k = self.0.iter().filter(|f| **f == Factor::E).count();
        (k, self.0.len() - k)
    }

    pub fn prefix(&self) -> Option<(TensorWord, Factor)> {
        let (last, rest) = self.0.split_last()?;
        Some((TensorWord(rest.to_vec()), *last))
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.0[i].name())?;
            if j - i > 1 {
                write!(f, "^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

impl FromStr for TensorWord {
    type Err = RepError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(TensorWord::trivial());
        }
        let bad = || RepError::BadWord(s.to_string());
        let mut out = Vec::new();
        for part in s.split('*') {
            let part = part.trim();
            let (base, exp) = match part.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim().parse::<usize>().map_err(|_| bad())?),
                None => (part, 1),
            };
            let f = match base {
                "E" => Factor::E,
                "Ebar" => Factor::Ebar,
                "1" => continue,
                _ => return Err(bad()),
            };
            out.extend(std::iter::repeat(f).take(exp));
        }
        Ok(TensorWord(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        for s in ["1", "E", "E^2*Ebar", "Ebar*E^3", "E*Ebar*E"] {
            assert_eq!(s.parse::<TensorWord>().unwrap().to_string(), s);
        }
        assert_eq!("E*E".parse::<TensorWord>().unwrap().to_string(), "E^2");
        assert!("F".parse::<TensorWord>().is_err());
        assert!("E^x".parse::<TensorWord>().is_err());
        assert_eq!(TensorWord::block(2, 1).bidegree(), (2, 1));
    }
}
