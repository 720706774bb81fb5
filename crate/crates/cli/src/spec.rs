//! Ring description files: a strict `key = value` format, one key per line,
//! `#` comments, and polynomial values in the same syntax the result
//! documents print. Parsing is split in two stages: a pure text stage that
//! reports line/column positions, and a build stage that hands semantic
//! validation to the algebra engine.

use std::collections::BTreeMap;
use std::sync::Arc;

use taukit_core::parse::parse_polynomial;
use taukit_core::{AlgebraError, Ideal, MonomialOrder, PolyRing, RingPresentation};
use thiserror::Error;

/// A diagnostic anchored to a position in the spec text.
#[derive(Debug, Clone, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct SpecError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, SpecError> {
    Err(SpecError {
        line,
        column,
        message: message.into(),
    })
}

/// A parsed ring description. Polynomial values are stored canonically
/// rendered, so `parse(render(spec)) == spec`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpecFile {
    pub p: u32,
    pub vars: Vec<String>,
    pub ideal: Vec<String>,
    pub minimal_primes: Option<Vec<Vec<String>>>,
    pub semigroup: Option<Vec<u64>>,
    pub reduced: Option<bool>,
    pub test_element: Option<String>,
}

const KEYS: [&str; 7] = [
    "p",
    "vars",
    "I",
    "minimal_primes",
    "semigroup",
    "reduced",
    "test_element",
];

/// A raw `key = value` occurrence with the position of the value text.
struct RawValue {
    line: usize,
    column: usize,
    text: String,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits `text` at top-level occurrences of `sep`, yielding the byte
/// offset of each piece so diagnostics can point into the original line.
fn split_with_offsets(text: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0usize;
    for (i, c) in text.char_indices() {
        if c == sep {
            out.push((start, &text[start..i]));
            start = i + 1;
        }
    }
    out.push((start, &text[start..]));
    out
}

/// Column (1-based) of the first non-space character of `piece`, measured
/// from `base` within the original line.
fn piece_column(base: usize, offset: usize, piece: &str) -> usize {
    base + offset + (piece.len() - piece.trim_start().len())
}

fn scan_lines(text: &str) -> Result<BTreeMap<String, RawValue>, SpecError> {
    let mut raw: BTreeMap<String, RawValue> = BTreeMap::new();
    for (idx, full_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = match full_line.find('#') {
            Some(pos) => &full_line[..pos],
            None => full_line,
        };
        if content.trim().is_empty() {
            continue;
        }
        let eq = match content.find('=') {
            Some(pos) => pos,
            None => {
                let col = 1 + (content.len() - content.trim_start().len());
                return err(line_no, col, "expected `key = value`");
            }
        };
        let key_piece = &content[..eq];
        let key = key_piece.trim();
        let key_col = 1 + (key_piece.len() - key_piece.trim_start().len());
        if key.is_empty() {
            return err(line_no, key_col, "missing key before `=`");
        }
        if !KEYS.contains(&key) {
            return err(line_no, key_col, format!("unknown key `{key}`"));
        }
        if raw.contains_key(key) {
            return err(line_no, key_col, format!("duplicate key `{key}`"));
        }
        let value_piece = &content[eq + 1..];
        let value = value_piece.trim();
        let value_col = eq + 2 + (value_piece.len() - value_piece.trim_start().len());
        if value.is_empty() {
            return err(line_no, value_col, format!("empty value for `{key}`"));
        }
        raw.insert(
            key.to_string(),
            RawValue {
                line: line_no,
                column: value_col,
                text: value.to_string(),
            },
        );
    }
    Ok(raw)
}

/// Canonicalizes one polynomial expression against the ring, translating
/// byte positions of the inner parser into line/column diagnostics.
fn canonical_poly(
    ring: &Arc<PolyRing>,
    line: usize,
    column: usize,
    expr: &str,
) -> Result<String, SpecError> {
    match parse_polynomial(ring, expr) {
        Ok(f) => Ok(f.to_string()),
        Err(AlgebraError::Parse { position, message }) => err(line, column + position, message),
        Err(other) => err(line, column, other.to_string()),
    }
}

fn poly_list(
    ring: &Arc<PolyRing>,
    line: usize,
    base_column: usize,
    text: &str,
) -> Result<Vec<String>, SpecError> {
    let mut out = Vec::new();
    for (offset, piece) in split_with_offsets(text, ';') {
        let col = piece_column(base_column, offset, piece);
        let expr = piece.trim();
        if expr.is_empty() {
            return err(line, col, "empty polynomial in list");
        }
        out.push(canonical_poly(ring, line, col, expr)?);
    }
    Ok(out)
}

/// Parses the spec grammar. Positions in errors are 1-based line/column.
pub fn parse_ring_spec(text: &str) -> Result<RingSpecFile, SpecError> {
    let mut raw = scan_lines(text)?;

    let p_raw = match raw.remove("p") {
        Some(v) => v,
        None => return err(1, 1, "missing required key `p`"),
    };
    let p: u32 = match p_raw.text.parse() {
        Ok(n) => n,
        Err(_) => return err(p_raw.line, p_raw.column, "p must be an integer"),
    };
    if !is_prime(p) {
        return err(p_raw.line, p_raw.column, "p must be prime");
    }

    let vars_raw = match raw.remove("vars") {
        Some(v) => v,
        None => return err(1, 1, "missing required key `vars`"),
    };
    let mut vars = Vec::new();
    for (offset, piece) in split_with_offsets(&vars_raw.text, ',') {
        let col = piece_column(vars_raw.column, offset, piece);
        let name = piece.trim();
        if !is_identifier(name) {
            return err(vars_raw.line, col, format!("invalid variable name `{name}`"));
        }
        if vars.iter().any(|v| v == name) {
            return err(vars_raw.line, col, format!("repeated variable `{name}`"));
        }
        vars.push(name.to_string());
    }

    let var_refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let ring = match PolyRing::new(p, &var_refs, MonomialOrder::GrevLex) {
        Ok(r) => r,
        Err(e) => return err(p_raw.line, p_raw.column, e.to_string()),
    };

    let i_raw = match raw.remove("I") {
        Some(v) => v,
        None => return err(1, 1, "missing required key `I`"),
    };
    let ideal = poly_list(&ring, i_raw.line, i_raw.column, &i_raw.text)?;

    let minimal_primes = match raw.remove("minimal_primes") {
        None => None,
        Some(v) => {
            let mut lists = Vec::new();
            for (offset, piece) in split_with_offsets(&v.text, '|') {
                let col = piece_column(v.column, offset, piece);
                let chunk = piece.trim();
                if !(chunk.starts_with('[') && chunk.ends_with(']')) {
                    return err(v.line, col, "each minimal prime must be bracketed: [polys]");
                }
                let inner = &chunk[1..chunk.len() - 1];
                lists.push(poly_list(&ring, v.line, col + 1, inner)?);
            }
            Some(lists)
        }
    };

    let semigroup = match raw.remove("semigroup") {
        None => None,
        Some(v) => {
            let mut weights = Vec::new();
            for (offset, piece) in split_with_offsets(&v.text, ',') {
                let col = piece_column(v.column, offset, piece);
                match piece.trim().parse::<u64>() {
                    Ok(w) => weights.push(w),
                    Err(_) => return err(v.line, col, "semigroup entries must be integers"),
                }
            }
            Some(weights)
        }
    };

    let reduced = match raw.remove("reduced") {
        None => None,
        Some(v) => match v.text.as_str() {
            "true" => Some(true),
            "false" => Some(false),
            other => {
                return err(v.line, v.column, format!("reduced must be true or false, got `{other}`"))
            }
        },
    };

    let test_element = match raw.remove("test_element") {
        None => None,
        Some(v) => Some(canonical_poly(&ring, v.line, v.column, &v.text)?),
    };

    Ok(RingSpecFile {
        p,
        vars,
        ideal,
        minimal_primes,
        semigroup,
        reduced,
        test_element,
    })
}

impl RingSpecFile {
    /// Renders the spec in the same grammar `parse_ring_spec` accepts.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("p = {}\n", self.p));
        out.push_str(&format!("vars = {}\n", self.vars.join(", ")));
        out.push_str(&format!("I = {}\n", self.ideal.join("; ")));
        if let Some(primes) = &self.minimal_primes {
            let rendered: Vec<String> = primes
                .iter()
                .map(|list| format!("[{}]", list.join("; ")))
                .collect();
            out.push_str(&format!("minimal_primes = {}\n", rendered.join(" | ")));
        }
        if let Some(weights) = &self.semigroup {
            let rendered: Vec<String> = weights.iter().map(|w| w.to_string()).collect();
            out.push_str(&format!("semigroup = {}\n", rendered.join(", ")));
        }
        if let Some(flag) = self.reduced {
            out.push_str(&format!("reduced = {flag}\n"));
        }
        if let Some(c) = &self.test_element {
            out.push_str(&format!("test_element = {c}\n"));
        }
        out
    }

    /// The ambient polynomial ring of the spec.
    pub fn ambient(&self) -> Result<Arc<PolyRing>, AlgebraError> {
        let var_refs: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        PolyRing::new(self.p, &var_refs, MonomialOrder::GrevLex)
    }

    /// Builds the validated ring presentation, delegating semantic checks
    /// (prime claims, semigroup substitution, reducedness of monomial
    /// ideals) to the algebra engine.
    pub fn build(&self) -> Result<RingPresentation, AlgebraError> {
        let ring = self.ambient()?;
        let gen_refs: Vec<&str> = self.ideal.iter().map(|s| s.as_str()).collect();
        let defining = Ideal::parse(&ring, &gen_refs)?;
        let mut rp = RingPresentation::new(ring.clone(), defining)?;
        if let Some(lists) = &self.minimal_primes {
            let mut primes = Vec::new();
            for list in lists {
                let refs: Vec<&str> = list.iter().map(|s| s.as_str()).collect();
                primes.push(Ideal::parse(&ring, &refs)?);
            }
            rp = rp.with_declared_min_primes(primes)?;
        }
        if let Some(weights) = &self.semigroup {
            rp = rp.with_semigroup(weights.clone())?;
        }
        if let Some(flag) = self.reduced {
            rp = rp.with_reduced_claim(flag)?;
        }
        if let Some(expr) = &self.test_element {
            rp = rp.with_test_element(parse_polynomial(&ring, expr)?)?;
        }
        Ok(rp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CUSP: &str = "# comment\np = 3\nvars = x, y\nI = y^2 - x^3\nsemigroup = 2, 3\nreduced = true\n";

    #[test]
    fn parses_a_full_spec() {
        let spec = parse_ring_spec(CUSP).unwrap();
        assert_eq!(spec.p, 3);
        assert_eq!(spec.vars, vec!["x", "y"]);
        assert_eq!(spec.ideal, vec!["2*x^3 + y^2"]);
        assert_eq!(spec.semigroup, Some(vec![2, 3]));
        assert_eq!(spec.reduced, Some(true));
        let rp = spec.build().unwrap();
        assert_eq!(rp.characteristic(), 3);
    }

    #[test]
    fn round_trips_through_render() {
        let spec = parse_ring_spec(CUSP).unwrap();
        let again = parse_ring_spec(&spec.render()).unwrap();
        assert_eq!(spec, again);
    }

    #[test]
    fn rejects_composite_characteristic() {
        let e = parse_ring_spec("p = 4\nvars = x\nI = x\n").unwrap_err();
        assert_eq!(e.message, "p must be prime");
        assert_eq!((e.line, e.column), (1, 5));
    }

    #[test]
    fn rejects_unknown_keys_with_position() {
        let e = parse_ring_spec("p = 2\nvars = x\nI = x\nfrobenius = 7\n").unwrap_err();
        assert!(e.message.contains("unknown key `frobenius`"));
        assert_eq!((e.line, e.column), (4, 1));
    }

    #[test]
    fn rejects_duplicate_keys() {
        let e = parse_ring_spec("p = 2\np = 3\nvars = x\nI = x\n").unwrap_err();
        assert!(e.message.contains("duplicate key `p`"));
        assert_eq!(e.line, 2);
    }

    #[test]
    fn polynomial_errors_point_into_the_line() {
        let e = parse_ring_spec("p = 2\nvars = x, y\nI = x*y; x +* y\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.column > 10, "column {} should sit in the second gen", e.column);
    }

    #[test]
    fn rejects_undeclared_variables() {
        let e = parse_ring_spec("p = 2\nvars = x\nI = x*z\n").unwrap_err();
        assert_eq!(e.line, 3);
    }

    #[test]
    fn parses_minimal_primes_lists() {
        let spec =
            parse_ring_spec("p = 2\nvars = x, y\nI = x*y\nminimal_primes = [x] | [y]\n").unwrap();
        assert_eq!(
            spec.minimal_primes,
            Some(vec![vec!["x".to_string()], vec!["y".to_string()]])
        );
        let rp = spec.build().unwrap();
        assert_eq!(rp.minimal_primes().unwrap().len(), 2);
    }

    #[test]
    fn build_rejects_contradictory_reduced_claim() {
        let spec = parse_ring_spec("p = 2\nvars = x\nI = x^2\nreduced = true\n").unwrap();
        assert!(spec.build().is_err());
    }

    #[test]
    fn missing_required_keys_are_reported() {
        let e = parse_ring_spec("vars = x\nI = x\n").unwrap_err();
        assert!(e.message.contains("missing required key `p`"));
    }
}
