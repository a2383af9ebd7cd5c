//! Word expressions: `word := factor ('*' factor)*`, `factor := name ('^' integer)?`.
//! The single factor `1` denotes the identity.

use thiserror::Error;

use crate::element::Element;
use crate::group::OrderedGroup;

/// Largest accepted exponent magnitude, keeping cyclic arithmetic far from
/// `i64` overflow.
pub const MAX_EXPONENT: i64 = 1_000_000_000;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("column {col}: {message}")]
pub struct WordError {
    /// 1-based character column of the offending token.
    pub col: usize,
    pub message: String,
}

fn err(col: usize, message: impl Into<String>) -> WordError {
    WordError {
        col,
        message: message.into(),
    }
}

fn is_name_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '.'
}

/// A parsed but unevaluated word: `(name, exponent, column)` factors.
/// The identity literal `1` contributes no factor.
pub fn parse_factors(text: &str) -> Result<Vec<(String, i64, usize)>, WordError> {
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    if chars.is_empty() {
        return Err(err(1, "empty word"));
    }
    loop {
        let start = i;
        match chars.get(i) {
            Some('1') if !chars.get(i + 1).is_some_and(|c| c.is_ascii_digit()) => {
                i += 1;
            }
            Some(&c) if is_name_start(c) => {
                while chars.get(i).is_some_and(|&c| is_name_char(c)) {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                let mut exp = 1;
                if chars.get(i) == Some(&'^') {
                    i += 1;
                    let num_start = i;
                    if chars.get(i) == Some(&'-') {
                        i += 1;
                    }
                    while chars.get(i).is_some_and(|c| c.is_ascii_digit()) {
                        i += 1;
                    }
                    let digits: String = chars[num_start..i].iter().collect();
                    exp = digits
                        .parse::<i64>()
                        .ok()
                        .filter(|e: &i64| e.abs() <= MAX_EXPONENT)
                        .ok_or_else(|| {
                            err(
                                num_start + 1,
                                format!("expected an integer exponent of magnitude at most {MAX_EXPONENT} after '^'"),
                            )
                        })?;
                }
                out.push((name, exp, start + 1));
            }
            Some(&c) => return Err(err(i + 1, format!("unexpected character '{c}'"))),
            None => return Err(err(i + 1, "expected a factor")),
        }
        match chars.get(i) {
            None => return Ok(out),
            Some('*') => i += 1,
            Some(&c) => return Err(err(i + 1, format!("unexpected character '{c}', expected '*'"))),
        }
    }
}

/// Parses and evaluates `text` in `group`.
pub fn parse_word<G: OrderedGroup + ?Sized>(text: &str, group: &G) -> Result<Element, WordError> {
    let factors = parse_factors(text)?;
    let gens = group.generators();
    let mut acc = group.identity();
    for (name, exp, col) in factors {
        let Some((_, g)) = gens.iter().find(|(n, _)| *n == name) else {
            let known: Vec<&str> = gens.iter().map(|(n, _)| n.as_str()).collect();
            return Err(err(
                col,
                format!("unknown generator `{name}` (known: {})", known.join(", ")),
            ));
        };
        acc = group.mul(&acc, &group.pow(g, exp));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;

    #[test]
    fn factors_and_exponents() {
        assert_eq!(
            parse_factors("x^2*y^-3").unwrap(),
            vec![("x".into(), 2, 1), ("y".into(), -3, 5)]
        );
        assert_eq!(parse_factors("1").unwrap(), vec![]);
        assert_eq!(parse_factors("L.x*R.y").unwrap()[1], ("R.y".into(), 1, 5));
    }

    #[test]
    fn malformed_words_report_columns() {
        assert_eq!(parse_factors("").unwrap_err().col, 1);
        assert_eq!(parse_factors("x*").unwrap_err().col, 3);
        assert_eq!(parse_factors("x^").unwrap_err().col, 3);
        assert_eq!(parse_factors("x ^2").unwrap_err().col, 2);
        assert_eq!(parse_factors("x^99999999999999999999").unwrap_err().col, 3);
        assert!(parse_factors("12").is_err());
    }

    #[test]
    fn evaluation_in_cyclic_group() {
        let z = Group::cyclic("x");
        assert_eq!(parse_word("x^3*x^-1", &z), Ok(Element::Cyclic(2)));
        assert_eq!(parse_word("1", &z), Ok(Element::Cyclic(0)));
        assert!(parse_word("y", &z).unwrap_err().message.contains("unknown generator"));
    }
}
