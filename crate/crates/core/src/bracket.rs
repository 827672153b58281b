//! The bracket language.
//!
//! A configuration of degree `d` is written as the elements `0 .. 2d-3` in
//! order, with round brackets around homoclinic pairs and square brackets
//! around transversal pairs. A bracket pair binds the element immediately
//! after its opening token to the element immediately before its closing
//! token, so `(0 1 2 3)` pairs 0 with 3.
//!
//! Elements are single digits when the text contains no whitespace
//! (`[01][2[34]5]`); otherwise every maximal digit run is one element
//! (`(0 1)[2 3] 4 5 6 7 8 9 10 11`). The letter `s` stands for the next
//! element in sequence, so `(ss)ss` reads as `(01)23`.

use std::fmt;

use thiserror::Error;

use crate::model::{Pair, PairKind, PairingConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BracketToken {
    Element(usize),
    OpenRound,
    CloseRound,
    OpenSquare,
    CloseSquare,
}

impl BracketToken {
    fn open_kind(self) -> Option<PairKind> {
        match self {
            BracketToken::OpenRound => Some(PairKind::Round),
            BracketToken::OpenSquare => Some(PairKind::Square),
            _ => None,
        }
    }

    fn close_kind(self) -> Option<PairKind> {
        match self {
            BracketToken::CloseRound => Some(PairKind::Round),
            BracketToken::CloseSquare => Some(PairKind::Square),
            _ => None,
        }
    }

    fn is_element(self) -> bool {
        matches!(self, BracketToken::Element(_))
    }
}

/// The five validity rules of the bracket language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ValidityRule {
    /// Each bracket type has as many closing as opening tokens.
    Unbalanced = 1,
    /// No prefix closes more brackets of a type than it opens.
    NegativePrefix = 2,
    /// Two opening (or two closing) brackets are never adjacent; a bracket
    /// always has an element on its inner side.
    AdjacentBrackets = 3,
    /// Every bracket pair encloses an even number of elements.
    OddEnclosed = 4,
    /// Round and square pairs nest rather than interleave.
    Crossing = 5,
}

impl ValidityRule {
    pub fn number(self) -> u8 {
        self as u8
    }
}

impl fmt::Display for ValidityRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self {
            ValidityRule::Unbalanced => "unbalanced brackets",
            ValidityRule::NegativePrefix => "closing bracket without an open one",
            ValidityRule::AdjacentBrackets => "adjacent same-side brackets",
            ValidityRule::OddEnclosed => "odd number of enclosed elements",
            ValidityRule::Crossing => "round and square brackets cross",
        };
        write!(f, "rule {}: {what}", self.number())
    }
}

/// First offending character offset for one violated rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RuleViolation {
    pub rule: ValidityRule,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {ch:?} at position {position}")]
    UnexpectedChar { ch: char, position: usize },
    #[error("element {found} at position {position}, expected {expected}")]
    ElementOrder {
        found: usize,
        expected: usize,
        position: usize,
    },
    #[error("{0} elements is odd; degree d needs 2d-2 elements")]
    OddLength(usize),
    /// One entry per violated rule, in rule order.
    #[error("{}", format_violations(.0))]
    Rules(Vec<RuleViolation>),
}

impl ParseError {
    /// Rule numbers violated, empty for lexical errors.
    pub fn rules(&self) -> Vec<u8> {
        match self {
            ParseError::Rules(v) => v.iter().map(|r| r.rule.number()).collect(),
            _ => Vec::new(),
        }
    }
}

fn format_violations(v: &[RuleViolation]) -> String {
    v.iter()
        .map(|r| format!("{} at position {}", r.rule, r.position))
        .collect::<Vec<_>>()
        .join("; ")
}

/// A tokenized bracket string with the character offset of every token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketString {
    tokens: Vec<(BracketToken, usize)>,
}

impl BracketString {
    pub fn tokenize(text: &str) -> Result<Self, ParseError> {
        let spaced = text.chars().any(char::is_whitespace);
        let mut tokens = Vec::new();
        let mut elements = 0;
        let mut chars = text.char_indices().peekable();
        while let Some((pos, ch)) = chars.next() {
            let tok = match ch {
                '(' => BracketToken::OpenRound,
                ')' => BracketToken::CloseRound,
                '[' => BracketToken::OpenSquare,
                ']' => BracketToken::CloseSquare,
                's' => BracketToken::Element(elements),
                c if c.is_whitespace() => continue,
                c if c.is_ascii_digit() => {
                    let mut value = c.to_digit(10).unwrap() as usize;
                    if spaced {
                        while let Some(&(_, d)) = chars.peek() {
                            let Some(digit) = d.to_digit(10) else { break };
                            value = value
                                .checked_mul(10)
                                .and_then(|v| v.checked_add(digit as usize))
                                .ok_or(ParseError::UnexpectedChar {
                                    ch: d,
                                    position: pos,
                                })?;
                            chars.next();
                        }
                    }
                    BracketToken::Element(value)
                }
                ch => return Err(ParseError::UnexpectedChar { ch, position: pos }),
            };
            if tok.is_element() {
                elements += 1;
            }
            tokens.push((tok, pos));
        }
        Ok(BracketString { tokens })
    }

    pub fn tokens(&self) -> impl Iterator<Item = BracketToken> + '_ {
        self.tokens.iter().map(|t| t.0)
    }

    fn element_count(&self) -> usize {
        self.tokens.iter().filter(|t| t.0.is_element()).count()
    }

    /// Checks element order, then every rule. Returns the matched pairs as
    /// token positions `(open, close)` in the token list.
    fn check(&self, end: usize) -> Result<Vec<(usize, usize)>, ParseError> {
        let mut expected = 0;
        for &(tok, position) in &self.tokens {
            if let BracketToken::Element(found) = tok {
                if found != expected {
                    return Err(ParseError::ElementOrder {
                        found,
                        expected,
                        position,
                    });
                }
                expected += 1;
            }
        }

        let mut violations: Vec<RuleViolation> = Vec::new();
        let mut flag = |rule, position| {
            if !violations.iter().any(|v: &RuleViolation| v.rule == rule) {
                violations.push(RuleViolation { rule, position });
            }
        };
        let toks = &self.tokens;

        // rules 1, 2 and 5 from a single matching pass
        let mut stack: Vec<(PairKind, usize)> = Vec::new();
        let mut matched = Vec::new();
        let mut opened = [0usize; 2];
        let mut closed = [0usize; 2];
        for (i, &(tok, pos)) in toks.iter().enumerate() {
            if let Some(kind) = tok.open_kind() {
                opened[kind as usize] += 1;
                stack.push((kind, i));
            } else if let Some(kind) = tok.close_kind() {
                closed[kind as usize] += 1;
                match stack.iter().rposition(|&(k, _)| k == kind) {
                    None => flag(ValidityRule::NegativePrefix, pos),
                    Some(at) => {
                        if at + 1 != stack.len() {
                            flag(ValidityRule::Crossing, pos);
                        }
                        let (_, open) = stack.remove(at);
                        matched.push((open, i));
                    }
                }
            }
        }
        if opened != closed {
            let pos = stack.first().map(|&(_, i)| toks[i].1).unwrap_or(end);
            flag(ValidityRule::Unbalanced, pos);
        }

        for (i, &(tok, pos)) in toks.iter().enumerate() {
            let inner_is_element = if tok.open_kind().is_some() {
                toks.get(i + 1).is_some_and(|t| t.0.is_element())
            } else if tok.close_kind().is_some() {
                i > 0 && toks[i - 1].0.is_element()
            } else {
                true
            };
            if !inner_is_element {
                flag(ValidityRule::AdjacentBrackets, pos);
            }
        }

        for &(open, close) in &matched {
            let enclosed = toks[open..close]
                .iter()
                .filter(|t| t.0.is_element())
                .count();
            if enclosed % 2 == 1 {
                flag(ValidityRule::OddEnclosed, toks[open].1);
            }
        }

        if violations.is_empty() {
            Ok(matched)
        } else {
            violations.sort_by_key(|v| v.rule);
            Err(ParseError::Rules(violations))
        }
    }

    /// Whether the string is a valid bracketing, for any element count.
    pub fn is_valid(&self) -> bool {
        self.check(usize::MAX).is_ok()
    }
}

/// Parses a bracket string into its pairing configuration.
pub fn parse(text: &str) -> Result<PairingConfig, ParseError> {
    let string = BracketString::tokenize(text)?;
    let matched = string.check(text.len())?;
    let n = string.element_count();
    if n % 2 == 1 {
        return Err(ParseError::OddLength(n));
    }
    let element = |i: usize| match string.tokens[i].0 {
        BracketToken::Element(e) => e,
        _ => unreachable!("rule 3 guarantees an element inside every bracket"),
    };
    let mut pairs: Vec<Pair> = matched
        .into_iter()
        .map(|(open, close)| {
            let kind = string.tokens[open].0.open_kind().unwrap();
            Pair::new(element(open + 1), element(close - 1), kind)
        })
        .collect();
    pairs.sort();
    Ok(PairingConfig::from_sorted_unchecked(n / 2 + 1, pairs))
}

/// Canonical text form: digits juxtaposed up to ten elements, otherwise a
/// space between directly adjacent elements.
pub fn render(config: &PairingConfig) -> String {
    let n = config.len();
    let spaced = n > 10;
    let mut opens = vec![None; n];
    let mut closes = vec![None; n];
    for p in config.pairs() {
        opens[p.low] = Some(p.kind);
        closes[p.high] = Some(p.kind);
    }
    let mut out = String::new();
    for i in 0..n {
        match opens[i] {
            Some(PairKind::Round) => out.push('('),
            Some(PairKind::Square) => out.push('['),
            None if spaced && i > 0 && closes[i - 1].is_none() => out.push(' '),
            None => {}
        }
        out.push_str(&i.to_string());
        match closes[i] {
            Some(PairKind::Round) => out.push(')'),
            Some(PairKind::Square) => out.push(']'),
            None => {}
        }
    }
    out
}

/// Placeholder form with every element written as `s`, as in `(ss)[ss]`.
pub fn render_placeholders(config: &PairingConfig) -> String {
    let mut out = String::with_capacity(2 * config.len());
    let mut closers = vec![None; config.len()];
    for p in config.pairs() {
        closers[p.high] = Some(p.kind);
    }
    for (i, closer) in closers.iter().enumerate() {
        match config.pair_of(i) {
            Some(p) if p.low == i => out.push(if p.kind == PairKind::Round { '(' } else { '[' }),
            _ => {}
        }
        out.push('s');
        match closer {
            Some(PairKind::Round) => out.push(')'),
            Some(PairKind::Square) => out.push(']'),
            None => {}
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rules(text: &str) -> Vec<u8> {
        parse(text).unwrap_err().rules()
    }

    #[test]
    fn parses_structurally_stable_example() {
        let c = parse("[01][2[34]5]").unwrap();
        let sq = |a, b| Pair::new(a, b, PairKind::Square);
        assert_eq!(c.degree(), 4);
        assert_eq!(c.pairs(), &[sq(0, 1), sq(2, 5), sq(3, 4)]);
        assert!(c.unpaired().is_empty());
    }

    #[test]
    fn rejects_the_invalid_examples() {
        assert_eq!(rules("((01)23)"), vec![3]);
        assert_eq!(rules("(012)3"), vec![4]);
        assert!(rules("([)]").contains(&5));
        assert_eq!(rules("(0[123)4]5"), vec![5]);
        assert_eq!(rules("0)(1"), vec![2]);
        assert_eq!(rules("(01"), vec![1]);
        assert_eq!(rules("()01"), vec![3]);
    }

    #[test]
    fn violation_positions() {
        match parse("((01)23)").unwrap_err() {
            ParseError::Rules(v) => assert_eq!(v[0].position, 0),
            e => panic!("{e}"),
        }
        match parse("(012)3").unwrap_err() {
            ParseError::Rules(v) => assert_eq!(v[0].position, 0),
            e => panic!("{e}"),
        }
    }

    #[test]
    fn rejects_bad_elements() {
        assert!(matches!(
            parse("(10)"),
            Err(ParseError::ElementOrder { .. })
        ));
        assert!(matches!(
            parse("0012"),
            Err(ParseError::ElementOrder { .. })
        ));
        assert!(matches!(parse("012"), Err(ParseError::OddLength(3))));
        assert!(matches!(
            parse("(0x)"),
            Err(ParseError::UnexpectedChar { ch: 'x', .. })
        ));
    }

    #[test]
    fn spaced_and_placeholder_forms() {
        let a = parse("(0 1 2 3)[4 5](6 7)").unwrap();
        let b = parse("(0123)[45](67)").unwrap();
        let c = parse("(ssss)[ss](ss)").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(parse("(01)ss").unwrap(), parse("(01)23").unwrap());
        let big = parse("(0 1)[2 3] 4 5 6 7 8 9 10 11").unwrap();
        assert_eq!(big.degree(), 7);
        assert_eq!(big.pairs().len(), 2);
    }

    #[test]
    fn render_examples() {
        assert_eq!(
            render(&parse("(0 1 2 3)[4 5](6 7)").unwrap()),
            "(0123)[45](67)"
        );
        assert_eq!(render(&PairingConfig::all_unpaired(1).unwrap()), "");
        assert_eq!(render(&parse("[01]").unwrap()), "[01]");
        let big = parse("[0 1][2 3] 4 5 6 7 8(9 10)11").unwrap();
        assert_eq!(render(&big), "[0 1][2 3]4 5 6 7 8(9 10)11");
        assert_eq!(parse(&render(&big)).unwrap(), big);
        assert_eq!(
            render_placeholders(&parse("(0[12]3)45").unwrap()),
            "(s[ss]s)ss"
        );
    }

    #[test]
    fn empty_string_is_degree_one() {
        let c = parse("").unwrap();
        assert_eq!(c.degree(), 1);
        assert!(c.is_empty());
    }
}
