//! Python tokenizer.
//!
//! Produces a flat token stream suitable for clone matching: comments and
//! indentation are dropped, string literals (including triple-quoted and
//! prefixed forms) are single tokens, and a `Newline` token marks the end of
//! each logical line. The lexer does not validate Python syntax; anything that
//! is not a string, number, name, or known operator becomes a one-character
//! operator token, so lexing only fails on unterminated strings.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Python 3 hard keywords. Soft keywords (`match`, `case`, `type`, `_`) are
/// treated as identifiers.
pub const KEYWORDS: &[&str] = &[
    "False", "None", "True", "and", "as", "assert", "async", "await", "break", "class", "continue", "def", "del",
    "elif", "else", "except", "finally", "for", "from", "global", "if", "import", "in", "is", "lambda", "nonlocal",
    "not", "or", "pass", "raise", "return", "try", "while", "with", "yield",
];

// Longest first so that greedy matching picks `**=` over `**` over `*`.
const OPERATORS: &[&str] = &[
    "**=", "//=", ">>=", "<<=", "...", "!=", "%=", "&=", "**", "*=", "+=", "-=", "->", "//", "/=", ":=", "<<", "<=",
    "==", ">=", ">>", "@=", "^=", "|=", "!", "%", "&", "(", ")", "*", "+", ",", "-", ".", "/", ":", ";", "<", "=", ">",
    "@", "[", "]", "^", "{", "|", "}", "~",
];

const PUNCTUATION: &[&str] = &["(", ")", "[", "]", "{", "}", ",", ":", ";", ".", "...", "->"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TokenKind {
    Identifier,
    Keyword,
    NumberLiteral,
    StringLiteral,
    Operator,
    Punctuation,
    Newline,
}

impl TokenKind {
    pub fn is_literal(self) -> bool {
        matches!(self, TokenKind::NumberLiteral | TokenKind::StringLiteral)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    /// 1-based line of the first character.
    pub line: usize,
    /// 1-based column (in characters) of the first character.
    pub column: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexError {
    #[error("unterminated string literal starting at line {line}, column {column}")]
    UnterminatedString { line: usize, column: usize },
}

impl LexError {
    pub fn position(&self) -> (usize, usize) {
        match *self {
            LexError::UnterminatedString { line, column } => (line, column),
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            TokenKind::Newline => write!(f, "<newline>"),
            _ => write!(f, "{}", self.text),
        }
    }
}

/// Text carried by `Newline` tokens.
pub const NEWLINE_TEXT: &str = "\n";

pub fn is_keyword(word: &str) -> bool {
    KEYWORDS.contains(&word)
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        Cursor { chars: src.chars().collect(), pos: 0, line: 1, column: 1 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<char> {
        self.chars.get(self.pos + offset).copied()
    }

    fn starts_with(&self, s: &str) -> bool {
        s.chars().enumerate().all(|(k, c)| self.chars.get(self.pos + k) == Some(&c))
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }
}

fn is_ident_start(c: char) -> bool {
    c == '_' || c.is_alphabetic()
}

fn is_ident_continue(c: char) -> bool {
    c == '_' || c.is_alphanumeric()
}

/// Length of a string prefix (`r`, `b`, `f`, `u`, `rb`, `fr`, ...) at the cursor
/// if it is immediately followed by a quote.
fn string_prefix_len(cur: &Cursor) -> Option<usize> {
    for len in [2usize, 1] {
        let mut prefix = String::new();
        for i in 0..len {
            prefix.push(cur.peek_at(i)?.to_ascii_lowercase());
        }
        let valid = matches!(prefix.as_str(), "r" | "b" | "f" | "u" | "rb" | "br" | "fr" | "rf");
        if valid && matches!(cur.peek_at(len), Some('\'') | Some('"')) {
            return Some(len);
        }
    }
    None
}

fn lex_string(cur: &mut Cursor, prefix_len: usize) -> Result<String, LexError> {
    let (line, column) = (cur.line, cur.column);
    let mut text = String::new();
    for _ in 0..prefix_len {
        text.push(cur.bump().expect("prefix checked"));
    }
    let quote = cur.peek().expect("quote checked");
    let triple = cur.peek_at(1) == Some(quote) && cur.peek_at(2) == Some(quote);
    let delim_len = if triple { 3 } else { 1 };
    for _ in 0..delim_len {
        text.push(cur.bump().expect("quote checked"));
    }
    loop {
        let Some(c) = cur.peek() else {
            return Err(LexError::UnterminatedString { line, column });
        };
        if c == '\\' {
            text.push(cur.bump().expect("peeked"));
            if let Some(escaped) = cur.bump() {
                text.push(escaped);
            }
            continue;
        }
        if c == '\n' && !triple {
            return Err(LexError::UnterminatedString { line, column });
        }
        if c == quote && (!triple || (cur.peek_at(1) == Some(quote) && cur.peek_at(2) == Some(quote))) {
            for _ in 0..delim_len {
                text.push(cur.bump().expect("peeked"));
            }
            return Ok(text);
        }
        text.push(cur.bump().expect("peeked"));
    }
}

fn lex_number(cur: &mut Cursor) -> String {
    let mut text = String::new();
    let radix_prefix = cur.peek() == Some('0') && matches!(cur.peek_at(1), Some('x' | 'X' | 'o' | 'O' | 'b' | 'B'));
    if radix_prefix {
        text.push(cur.bump().expect("peeked"));
        text.push(cur.bump().expect("peeked"));
        while let Some(c) = cur.peek() {
            if c.is_ascii_hexdigit() || c == '_' {
                text.push(cur.bump().expect("peeked"));
            } else {
                break;
            }
        }
        return text;
    }
    let digits = |cur: &mut Cursor, text: &mut String| {
        while let Some(c) = cur.peek() {
            if c.is_ascii_digit() || c == '_' {
                text.push(cur.bump().expect("peeked"));
            } else {
                break;
            }
        }
    };
    digits(cur, &mut text);
    if cur.peek() == Some('.') {
        text.push(cur.bump().expect("peeked"));
        digits(cur, &mut text);
    }
    if matches!(cur.peek(), Some('e' | 'E')) {
        let sign = matches!(cur.peek_at(1), Some('+' | '-'));
        let digit_at = if sign { 2 } else { 1 };
        if cur.peek_at(digit_at).is_some_and(|c| c.is_ascii_digit()) {
            for _ in 0..digit_at {
                text.push(cur.bump().expect("peeked"));
            }
            digits(cur, &mut text);
        }
    }
    if matches!(cur.peek(), Some('j' | 'J')) {
        text.push(cur.bump().expect("peeked"));
    }
    text
}

/// Tokenizes Python source.
pub fn tokenize(source: &str) -> Result<Vec<Token>, LexError> {
    let mut cur = Cursor::new(source);
    let mut tokens: Vec<Token> = Vec::new();
    let mut depth: usize = 0;

    while let Some(c) = cur.peek() {
        let (line, column) = (cur.line, cur.column);
        match c {
            '\n' => {
                cur.bump();
                let at_line_end = tokens.last().is_some_and(|t| t.kind != TokenKind::Newline);
                if depth == 0 && at_line_end {
                    tokens.push(Token { kind: TokenKind::Newline, text: NEWLINE_TEXT.to_string(), line, column });
                }
            }
            '#' => {
                while cur.peek().is_some_and(|c| c != '\n') {
                    cur.bump();
                }
            }
            '\\' if matches!(cur.peek_at(1), Some('\n')) => {
                cur.bump();
                cur.bump();
            }
            '\\' if cur.peek_at(1) == Some('\r') && cur.peek_at(2) == Some('\n') => {
                cur.bump();
                cur.bump();
                cur.bump();
            }
            c if c.is_whitespace() => {
                cur.bump();
            }
            '\'' | '"' => {
                let text = lex_string(&mut cur, 0)?;
                tokens.push(Token { kind: TokenKind::StringLiteral, text, line, column });
            }
            c if c.is_ascii_digit() || (c == '.' && cur.peek_at(1).is_some_and(|d| d.is_ascii_digit())) => {
                let text = lex_number(&mut cur);
                tokens.push(Token { kind: TokenKind::NumberLiteral, text, line, column });
            }
            c if is_ident_start(c) => {
                if let Some(prefix_len) = string_prefix_len(&cur) {
                    let text = lex_string(&mut cur, prefix_len)?;
                    tokens.push(Token { kind: TokenKind::StringLiteral, text, line, column });
                    continue;
                }
                let mut text = String::new();
                while cur.peek().is_some_and(is_ident_continue) {
                    text.push(cur.bump().expect("peeked"));
                }
                let kind = if is_keyword(&text) { TokenKind::Keyword } else { TokenKind::Identifier };
                tokens.push(Token { kind, text, line, column });
            }
            _ => {
                let op = OPERATORS.iter().find(|op| cur.starts_with(op));
                let text = match op {
                    Some(op) => {
                        for _ in 0..op.chars().count() {
                            cur.bump();
                        }
                        (*op).to_string()
                    }
                    None => cur.bump().expect("peeked").to_string(),
                };
                match text.as_str() {
                    "(" | "[" | "{" => depth += 1,
                    ")" | "]" | "}" => depth = depth.saturating_sub(1),
                    _ => {}
                }
                let kind =
                    if PUNCTUATION.contains(&text.as_str()) { TokenKind::Punctuation } else { TokenKind::Operator };
                tokens.push(Token { kind, text, line, column });
            }
        }
    }
    Ok(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds_and_texts(src: &str) -> Vec<(TokenKind, String)> {
        tokenize(src).unwrap().into_iter().map(|t| (t.kind, t.text)).collect()
    }

    use TokenKind::*;

    #[test]
    fn tuple_swap_line() {
        let toks = kinds_and_texts("a, b = b, a");
        let expected = vec![
            (Identifier, "a"),
            (Punctuation, ","),
            (Identifier, "b"),
            (Operator, "="),
            (Identifier, "b"),
            (Punctuation, ","),
            (Identifier, "a"),
        ];
        let expected: Vec<_> = expected.into_iter().map(|(k, t)| (k, t.to_string())).collect();
        assert_eq!(toks, expected);
    }

    #[test]
    fn comment_is_dropped() {
        let toks = kinds_and_texts("x = 1  # note");
        assert_eq!(
            toks,
            vec![(Identifier, "x".to_string()), (Operator, "=".to_string()), (NumberLiteral, "1".to_string())]
        );
    }

    #[test]
    fn hash_inside_string_is_not_a_comment() {
        let toks = kinds_and_texts("s = \"#not a comment\"");
        assert_eq!(toks[2], (StringLiteral, "\"#not a comment\"".to_string()));
        assert_eq!(toks.len(), 3);
    }

    #[test]
    fn triple_quoted_string_spans_lines() {
        let toks = tokenize("doc = '''one\ntwo # x\n'''\nz = 2\n").unwrap();
        assert_eq!(toks[2].kind, StringLiteral);
        assert_eq!(toks[2].text, "'''one\ntwo # x\n'''");
        assert_eq!(toks[3].kind, Newline);
        let z = toks.iter().find(|t| t.text == "z").unwrap();
        assert_eq!((z.line, z.column), (4, 1));
    }

    #[test]
    fn prefixed_strings() {
        for src in ["rb'\\d'", "f\"{x}\"", "U'x'", "Rb\"y\""] {
            let toks = tokenize(src).unwrap();
            assert_eq!(toks.len(), 1, "{src}");
            assert_eq!(toks[0].kind, StringLiteral);
        }
        // A plain name that merely starts like a prefix.
        let toks = tokenize("rb = 1").unwrap();
        assert_eq!(toks[0].kind, Identifier);
    }

    #[test]
    fn unterminated_string_reports_position() {
        let err = tokenize("x = 1\ny = 'abc\n").unwrap_err();
        assert_eq!(err, LexError::UnterminatedString { line: 2, column: 5 });
        let err = tokenize("s = \"\"\"never closed").unwrap_err();
        assert_eq!(err.position(), (1, 5));
    }

    #[test]
    fn escaped_quote_does_not_terminate() {
        let toks = tokenize(r#"s = 'it\'s'"#).unwrap();
        assert_eq!(toks[2].text, r#"'it\'s'"#);
    }

    #[test]
    fn keywords_versus_identifiers() {
        let toks = tokenize("for i in range(10): pass").unwrap();
        let kinds: Vec<_> = toks.iter().map(|t| t.kind).collect();
        assert_eq!(
            kinds,
            vec![
                Keyword,
                Identifier,
                Keyword,
                Identifier,
                Punctuation,
                NumberLiteral,
                Punctuation,
                Punctuation,
                Keyword
            ]
        );
        assert_eq!(tokenize("match = True").unwrap()[0].kind, Identifier);
    }

    #[test]
    fn numbers() {
        for src in ["0xFF", "1_000", "3.14", ".5", "1e-3", "2j", "0b1010", "10."] {
            let toks = tokenize(src).unwrap();
            assert_eq!(toks.len(), 1, "{src}: {toks:?}");
            assert_eq!(toks[0].kind, NumberLiteral);
        }
        // Attribute access on a name is not a number.
        let toks = tokenize("a.b").unwrap();
        assert_eq!(toks.len(), 3);
    }

    #[test]
    fn greedy_operators() {
        let texts: Vec<_> = tokenize("x **= 2 // y -> z != w").unwrap().into_iter().map(|t| t.text).collect();
        assert_eq!(texts, vec!["x", "**=", "2", "//", "y", "->", "z", "!=", "w"]);
    }

    #[test]
    fn newlines_only_at_logical_line_ends() {
        let src = "\n\nitems = [\n    1,\n    2,\n]\n\n\nprint(items)\n";
        let toks = tokenize(src).unwrap();
        let newlines = toks.iter().filter(|t| t.kind == Newline).count();
        assert_eq!(newlines, 2);
        assert_ne!(toks[0].kind, Newline);
    }

    #[test]
    fn backslash_continuation_joins_lines() {
        let toks = tokenize("total = a + \\\n    b\n").unwrap();
        assert_eq!(toks.iter().filter(|t| t.kind == Newline).count(), 1);
    }

    #[test]
    fn positions_non_decreasing() {
        let src = "def f(a,\n      b):\n    return a  # c\n\nx = '''\n'''\n";
        let toks = tokenize(src).unwrap();
        for pair in toks.windows(2) {
            assert!((pair[0].line, pair[0].column) <= (pair[1].line, pair[1].column));
        }
    }

    #[test]
    fn unknown_characters_are_total() {
        let toks = tokenize("a ? b $ `c`").unwrap();
        assert!(toks.iter().all(|t| !t.text.is_empty()));
        assert_eq!(toks.len(), 7);
    }
}
