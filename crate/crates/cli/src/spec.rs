//! The module mini-language: `line(1,0)`, `E^2*Ebar`, `E^2*Ebar[hw=(2,-1)]`,
//! `E*Ebar|k` and `E*Ebar|k[hw=(1,-1)]`.

use std::fmt;
use std::str::FromStr;

use superq::homogeneous::{ParabolicSpec, Subalgebra};
use superq::uqrep::{cache, RepModule, SuperIndex, TensorWord, Weight};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleSpec {
    /// A one-dimensional weight module.
    Line(Weight),
    Word(TensorWord),
    /// The irreducible summand of the word with this highest weight.
    Summand(TensorWord, Weight),
    /// The word restricted to the Levi part, or its Levi summand of this highest weight.
    Levi(TensorWord, Option<Weight>),
}

pub fn parse_weight(s: &str) -> Result<Weight, CliError> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Result<Vec<i64>, _> = inner.split(',').map(|p| p.trim().parse::<i64>()).collect();
    parts
        .map(Weight)
        .map_err(|_| CliError::Usage(format!("malformed weight `{s}`")))
}

fn parse_word(s: &str) -> Result<TensorWord, CliError> {
    TensorWord::from_str(s.trim()).map_err(|e| CliError::Usage(e.to_string()))
}

fn split_hw(s: &str) -> Result<(&str, Option<Weight>), CliError> {
    match s.find('[') {
        None => Ok((s, None)),
        Some(i) => {
            let tail = &s[i..];
            let w = tail
                .strip_prefix("[hw=")
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| CliError::Usage(format!("malformed selector `{tail}`")))?;
            Ok((&s[..i], Some(parse_weight(w)?)))
        }
    }
}

impl FromStr for ModuleSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("line") {
            return Ok(ModuleSpec::Line(parse_weight(rest)?));
        }
        let (head, hw) = split_hw(s)?;
        if let Some(word) = head.strip_suffix("|k") {
            return Ok(ModuleSpec::Levi(parse_word(word)?, hw));
        }
        let word = parse_word(head)?;
        Ok(match hw {
            None => ModuleSpec::Word(word),
            Some(w) => ModuleSpec::Summand(word, w),
        })
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleSpec::Line(w) => write!(f, "line{w}"),
            ModuleSpec::Word(w) => write!(f, "{w}"),
            ModuleSpec::Summand(w, hw) => write!(f, "{w}[hw={hw}]"),
            ModuleSpec::Levi(w, None) => write!(f, "{w}|k"),
            ModuleSpec::Levi(w, Some(hw)) => write!(f, "{w}|k[hw={hw}]"),
        }
    }
}

impl ModuleSpec {
    /// Whether the module is a tensor word module or one of its summands.
    pub fn has_tensor_provenance(&self) -> bool {
        matches!(self, ModuleSpec::Word(_) | ModuleSpec::Summand(..))
    }

    pub fn build(&self, idx: SuperIndex, p: &ParabolicSpec) -> Result<RepModule, CliError> {
        let check = |w: &Weight| {
            if w.len() == idx.size() {
                Ok(())
            } else {
                Err(CliError::Usage(format!("weight {w} needs {} entries", idx.size())))
            }
        };
        match self {
            ModuleSpec::Line(w) => {
                check(w)?;
                if !p.admits_line(w) {
                    return Err(CliError::Usage(format!("line{w} is not a module for the Levi factor of Θ = {p}")));
                }
                Ok(RepModule::weight_line(idx, w, w.parity(&idx))?)
            }
            ModuleSpec::Word(w) => Ok((*cache::module(idx, w)?).clone()),
            ModuleSpec::Summand(w, hw) => {
                check(hw)?;
                let d = cache::decomposition(idx, w)?;
                d.summands
                    .iter()
                    .find(|s| &s.highest_weight == hw)
                    .map(|s| s.module.clone())
                    .ok_or_else(|| CliError::Usage(format!("{w} has no irreducible summand of highest weight {hw}")))
            }
            ModuleSpec::Levi(w, None) => Ok(p.restrict(&*cache::module(idx, w)?, Subalgebra::Levi)),
            ModuleSpec::Levi(w, Some(hw)) => {
                check(hw)?;
                p.k_summand(&*cache::module(idx, w)?, hw)?
                    .ok_or_else(|| CliError::Usage(format!("{w} has no Levi irrep of highest weight {hw}")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for s in ["line(1,0)", "E^2*Ebar", "E^2*Ebar[hw=(2,-1)]", "E*Ebar|k", "E|k[hw=(1,0,0)]"] {
            let spec: ModuleSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!("E^2*X".parse::<ModuleSpec>().is_err());
        assert!("E[hw=1,0".parse::<ModuleSpec>().is_err());
        assert!("line(a,b)".parse::<ModuleSpec>().is_err());
    }

    #[test]
    fn provenance() {
        assert!("E^2[hw=(2,0)]".parse::<ModuleSpec>().unwrap().has_tensor_provenance());
        assert!(!"line(1,0)".parse::<ModuleSpec>().unwrap().has_tensor_provenance());
        assert!(!"E|k".parse::<ModuleSpec>().unwrap().has_tensor_provenance());
    }
}
