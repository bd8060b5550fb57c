//! Plain-text ideal format.
//!
//! ```text
//! vars: z1 z2 z3
//! z1^2
//! z1 z2
//! z2 z3
//! ```
//!
//! The header declares the variable order. Each further line is one
//! generator as space-separated `name` or `name^exp` tokens, `1` for the
//! unit monomial. Blank lines and lines starting with `#` are skipped.
//! [`write_ideal`] emits the minimal generators in canonical order with
//! exponent 1 omitted, so `parse → write` is the identity on its output.

use std::fmt::Write as _;

use monres_core::{Monomial, MonomialIdeal, VariableSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `vars:` header")]
    MissingHeader,
    #[error(transparent)]
    Core(#[from] monres_core::Error),
}

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let names = header.strip_prefix("vars:").ok_or(ParseError::MissingHeader)?;
    let vars = VariableSet::new(names.split_whitespace().map(String::from).collect())?;
    let mut gens = Vec::new();
    for (line, body) in lines {
        gens.push(parse_monomial(&vars, body).map_err(|msg| ParseError::Syntax { line, msg })?);
    }
    Ok(MonomialIdeal::minimalize(vars, gens)?)
}

pub fn parse_monomial(vars: &VariableSet, body: &str) -> Result<Monomial, String> {
    let mut exps = vec![0u32; vars.len()];
    if body.trim() == "1" {
        return Ok(Monomial::new(exps));
    }
    for token in body.split_whitespace() {
        let (name, exp) = match token.split_once('^') {
            Some((name, e)) => (name, e.parse::<u32>().map_err(|_| format!("bad exponent in {token:?}"))?),
            None => (token, 1),
        };
        let i = vars.index_of(name).ok_or_else(|| format!("unknown variable {name:?}"))?;
        exps[i] = exps[i].checked_add(exp).ok_or_else(|| format!("exponent overflow at {token:?}"))?;
    }
    Ok(Monomial::new(exps))
}

pub fn write_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = String::from("vars:");
    for name in ideal.vars().names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    for g in ideal.gens() {
        writeln!(out, "{}", g.display(ideal.vars())).expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "vars: z1 z2 z3\nz1^2\nz1 z2\nz2^2\nz2 z3\n";
        let ideal = parse_ideal(text).unwrap();
        assert_eq!(ideal.gens().len(), 4);
        assert_eq!(write_ideal(&ideal), text);
    }

    #[test]
    fn lenient_input() {
        let text = "# comment\nvars: a b\n\nb^1 a\na^1 b^1 a\n";
        let ideal = parse_ideal(text).unwrap();
        assert_eq!(write_ideal(&ideal), "vars: a b\na b\n");
    }

    #[test]
    fn errors() {
        assert_eq!(parse_ideal(""), Err(ParseError::MissingHeader));
        assert_eq!(parse_ideal("a b\n"), Err(ParseError::MissingHeader));
        assert!(matches!(parse_ideal("vars: a\nb\n"), Err(ParseError::Syntax { line: 2, .. })));
        assert!(matches!(parse_ideal("vars: a\na^x\n"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_ideal("vars: a a\n"), Err(ParseError::Core(_))));
    }

    #[test]
    fn unit_and_zero() {
        let unit = parse_ideal("vars: a b\n1\na\n").unwrap();
        assert_eq!(write_ideal(&unit), "vars: a b\n1\n");
        let zero = parse_ideal("vars: a b\n").unwrap();
        assert!(zero.is_zero());
        assert_eq!(write_ideal(&zero), "vars: a b\n");
    }
}
