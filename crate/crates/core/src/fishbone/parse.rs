//! Concrete syntax for fishbones.
//!
//! Grammar: an optional `INT (>=|>)` prefix, `X<idx>` tokens joined by
//! `>=` or `>`, and an optional `(>=|>) INT` suffix. Variable indices
//! must cover 1..=d exactly once. Strict extreme signs are normalized to
//! the equivalent weak bound while parsing, so rendering always shows
//! `M >= ... >= m`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{Fishbone, Sign};

/// Anything that can go wrong building, parsing, or applying a fishbone.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FishboneError {
    #[error("a fishbone needs at least one variable")]
    EmptyChain,
    #[error("duplicate variable X{0}")]
    DuplicateVariable(usize),
    #[error("variable X{index} is out of range for a {dimension}-variable chain")]
    VariableOutOfRange { index: usize, dimension: usize },
    #[error("{variables} variables take {} signs, found {signs}", variables - 1)]
    SignCountMismatch { variables: usize, signs: usize },
    #[error("extremes out of order: lower {lower} exceeds upper {upper}")]
    ExtremesOutOfOrder { upper: i64, lower: i64 },
    #[error("unexpected `{text}` at byte {at}")]
    UnexpectedToken { at: usize, text: String },
    #[error("the expression ends before the chain is complete")]
    TruncatedExpression,
    #[error("a lattice point needs at least one coordinate")]
    EmptyPoint,
    #[error("zone-coordinates start at 1")]
    ZeroCoordinate,
    #[error("a {fishbone}-variable fishbone cannot test a {point}-coordinate point")]
    DimensionMismatch { fishbone: usize, point: usize },
    #[error("point ({point}) does not satisfy {fishbone}")]
    UnsatisfiedPoint { fishbone: String, point: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Var(usize),
    Int(i64),
    Sign(Sign),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, FishboneError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' => i += 1,
            b'>' => {
                if bytes.get(i + 1) == Some(&b'=') {
                    tokens.push((i, Token::Sign(Sign::Weak)));
                    i += 2;
                } else {
                    tokens.push((i, Token::Sign(Sign::Strict)));
                    i += 1;
                }
            }
            b'X' | b'x' => {
                let start = i;
                i += 1;
                let digits_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[digits_start..i];
                let index: usize = digits.parse().map_err(|_| FishboneError::UnexpectedToken {
                    at: start,
                    text: text[start..i.max(start + 1)].to_string(),
                })?;
                tokens.push((start, Token::Var(index)));
            }
            b'0'..=b'9' | b'-' => {
                let start = i;
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let value: i64 =
                    text[start..i]
                        .parse()
                        .map_err(|_| FishboneError::UnexpectedToken {
                            at: start,
                            text: text[start..i].to_string(),
                        })?;
                tokens.push((start, Token::Int(value)));
            }
            _ => {
                let ch = text[i..].chars().next().expect("in range");
                return Err(FishboneError::UnexpectedToken {
                    at: i,
                    text: ch.to_string(),
                });
            }
        }
    }
    Ok(tokens)
}

impl FromStr for Fishbone {
    type Err = FishboneError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let tokens = tokenize(text)?;
        let mut pos = 0;
        let next = |pos: &mut usize| -> Option<&(usize, Token)> {
            let t = tokens.get(*pos);
            *pos += 1;
            t
        };

        // optional "INT sign" prefix
        let mut upper_raw: Option<(i64, Sign)> = None;
        if let Some((_, Token::Int(value))) = tokens.first() {
            pos += 1;
            match next(&mut pos) {
                Some((_, Token::Sign(sign))) => upper_raw = Some((*value, *sign)),
                Some((at, _)) => {
                    return Err(FishboneError::UnexpectedToken {
                        at: *at,
                        text: text[*at..].split_whitespace().next().unwrap_or("").to_string(),
                    })
                }
                None => return Err(FishboneError::TruncatedExpression),
            }
        }

        let mut order = Vec::new();
        let mut signs = Vec::new();
        let mut lower_raw: Option<(Sign, i64)> = None;

        match next(&mut pos) {
            Some((_, Token::Var(index))) => order.push(*index),
            Some((at, _)) => {
                return Err(FishboneError::UnexpectedToken {
                    at: *at,
                    text: text[*at..].split_whitespace().next().unwrap_or("").to_string(),
                })
            }
            None => return Err(FishboneError::EmptyChain),
        }

        loop {
            let sign = match next(&mut pos) {
                None => break,
                Some((_, Token::Sign(sign))) => *sign,
                Some((at, _)) => {
                    return Err(FishboneError::UnexpectedToken {
                        at: *at,
                        text: text[*at..].split_whitespace().next().unwrap_or("").to_string(),
                    })
                }
            };
            match next(&mut pos) {
                Some((_, Token::Var(index))) => {
                    signs.push(sign);
                    order.push(*index);
                }
                Some((_, Token::Int(value))) => {
                    lower_raw = Some((sign, *value));
                    if let Some((at, _)) = tokens.get(pos) {
                        return Err(FishboneError::UnexpectedToken {
                            at: *at,
                            text: text[*at..].split_whitespace().next().unwrap_or("").to_string(),
                        });
                    }
                    break;
                }
                Some((at, _)) => {
                    return Err(FishboneError::UnexpectedToken {
                        at: *at,
                        text: text[*at..].split_whitespace().next().unwrap_or("").to_string(),
                    })
                }
                None => return Err(FishboneError::TruncatedExpression),
            }
        }

        if let (Some((upper, _)), Some((_, lower))) = (upper_raw, lower_raw) {
            if lower > upper {
                return Err(FishboneError::ExtremesOutOfOrder { upper, lower });
            }
        }

        let upper = upper_raw.map(|(value, sign)| value - (sign == Sign::Strict) as i64);
        let lower = lower_raw.map(|(sign, value)| value + (sign == Sign::Strict) as i64);
        Fishbone::new(order, signs, upper, lower)
    }
}

impl fmt::Display for Fishbone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(upper) = self.upper {
            write!(f, "{upper} >= ")?;
        }
        for (i, index) in self.order.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", self.signs[i - 1].token())?;
            }
            write!(f, "X{index}")?;
        }
        if let Some(lower) = self.lower {
            write!(f, " >= {lower}")?;
        }
        Ok(())
    }
}
