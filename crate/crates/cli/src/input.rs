//! The curve list format.
//!
//! One record per line, `#` starts a comment:
//!
//! ```text
//! 37a 0 0 1 -1 0        # label a1 a2 a3 a4 a6
//! X   j -9317           # label j <num>
//! Y   j -882216989/131072
//! ```

use std::io::BufRead;
use std::str::FromStr;

use exceptional_core::curve::is_cm_j;
use exceptional_core::pipeline::CurveInput;
use exceptional_core::{BigInt, BigRational};
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InputError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: j = {j} is a CM j-invariant")]
    ComplexMultiplication { line: usize, j: BigRational },
}

impl InputError {
    pub fn line(&self) -> usize {
        match self {
            InputError::Syntax { line, .. } | InputError::ComplexMultiplication { line, .. } => *line,
        }
    }
}

/// A record together with its 1-based source line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Located<T> {
    pub line: usize,
    pub value: T,
}

pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| format!("bad integer {num:?}"))?;
    let den = BigInt::from_str(den).map_err(|_| format!("bad integer {den:?}"))?;
    if den.is_zero() {
        return Err("zero denominator".into());
    }
    Ok(BigRational::new(num, den))
}

/// Parses one line; `Ok(None)` for blank and comment lines.
pub fn parse_line(line_no: usize, raw: &str) -> Result<Option<CurveInput>, InputError> {
    let content = raw.split('#').next().unwrap_or("").trim();
    if content.is_empty() {
        return Ok(None);
    }
    let syntax = |message: String| InputError::Syntax { line: line_no, message };
    let fields: Vec<&str> = content.split_whitespace().collect();
    match fields.as_slice() {
        [label, "j", value] => {
            let j = parse_rational(value).map_err(syntax)?;
            if is_cm_j(&j) {
                return Err(InputError::ComplexMultiplication { line: line_no, j });
            }
            Ok(Some(CurveInput::from_j(*label, j)))
        }
        [label, a1, a2, a3, a4, a6] => {
            let mut a: [BigInt; 5] = Default::default();
            for (slot, text) in a.iter_mut().zip([a1, a2, a3, a4, a6]) {
                *slot = BigInt::from_str(text).map_err(|_| syntax(format!("bad integer {text:?}")))?;
            }
            Ok(Some(CurveInput::from_ainvariants(*label, a)))
        }
        _ => Err(syntax(format!(
            "expected `label a1 a2 a3 a4 a6` or `label j <num>[/<den>]`, got {} fields",
            fields.len()
        ))),
    }
}

/// Every record of the stream in order, malformed lines included as
/// errors so that a batch can continue past them.
pub fn parse_curves<R: BufRead>(reader: R) -> std::io::Result<Vec<Result<Located<CurveInput>, InputError>>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        match parse_line(line_no, &line?) {
            Ok(Some(value)) => out.push(Ok(Located { line: line_no, value })),
            Ok(None) => {}
            Err(e) => out.push(Err(e)),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exceptional_core::pipeline::CurvePayload;

    #[test]
    fn examples() {
        let c = parse_line(1, "37a 0 0 1 -1 0").unwrap().unwrap();
        assert_eq!(c.label, "37a");
        assert!(matches!(c.payload, CurvePayload::AInvariants(_)));
        let c = parse_line(2, "X j -9317").unwrap().unwrap();
        assert_eq!(c.payload, CurvePayload::J(BigRational::from_integer(BigInt::from(-9317))));
        assert_eq!(parse_line(3, "bad 0 0").unwrap_err().line(), 3);
        assert_eq!(parse_line(4, "  # only a comment").unwrap(), None);
        assert!(matches!(
            parse_line(5, "cm j 1728"),
            Err(InputError::ComplexMultiplication { line: 5, .. })
        ));
        assert!(parse_line(6, "z j 1/0").is_err());
    }

    #[test]
    fn stream_keeps_line_numbers() {
        let text = "# header\n\na 0 0 1 -1 0\nb x\nc j 2/3\n";
        let parsed = parse_curves(text.as_bytes()).unwrap();
        assert_eq!(parsed.len(), 3);
        assert_eq!(parsed[0].as_ref().unwrap().line, 3);
        assert_eq!(parsed[1].as_ref().unwrap_err().line(), 4);
        assert_eq!(parsed[2].as_ref().unwrap().line, 5);
    }
}
