//! The four token abstraction levels used for clone matching.
//!
//! | level | content                                              |
//! |-------|------------------------------------------------------|
//! | r0    | every token verbatim, logical-line breaks included   |
//! | r1    | r0 without line breaks                               |
//! | r2    | r1 with every identifier replaced by `ID`            |
//! | r3    | r2 with every number/string literal replaced by `LIT`|
//!
//! Keywords are kept verbatim at every level. r1..r3 are per-token
//! substitutions over the same stream, so they always have equal length.

use crate::lexer::{Token, TokenKind};

pub const IDENTIFIER_PLACEHOLDER: &str = "ID";
pub const LITERAL_PLACEHOLDER: &str = "LIT";

/// Number of representation levels.
pub const LEVELS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RepresentationSet {
    pub r0: Vec<String>,
    pub r1: Vec<String>,
    pub r2: Vec<String>,
    pub r3: Vec<String>,
}

impl RepresentationSet {
    pub fn level(&self, level: usize) -> &[String] {
        match level {
            0 => &self.r0,
            1 => &self.r1,
            2 => &self.r2,
            3 => &self.r3,
            _ => panic!("representation level {level} out of range"),
        }
    }

    pub fn levels(&self) -> [&[String]; LEVELS] {
        [&self.r0, &self.r1, &self.r2, &self.r3]
    }

    pub fn is_empty(&self) -> bool {
        self.r0.is_empty()
    }
}

pub fn representations(tokens: &[Token]) -> RepresentationSet {
    let mut set = RepresentationSet {
        r0: Vec::with_capacity(tokens.len()),
        r1: Vec::with_capacity(tokens.len()),
        r2: Vec::with_capacity(tokens.len()),
        r3: Vec::with_capacity(tokens.len()),
    };
    for token in tokens {
        set.r0.push(token.text.clone());
        if token.kind == TokenKind::Newline {
            continue;
        }
        set.r1.push(token.text.clone());
        let r2 = match token.kind {
            TokenKind::Identifier => IDENTIFIER_PLACEHOLDER.to_string(),
            _ => token.text.clone(),
        };
        let r3 = match token.kind {
            TokenKind::Identifier => IDENTIFIER_PLACEHOLDER.to_string(),
            k if k.is_literal() => LITERAL_PLACEHOLDER.to_string(),
            _ => token.text.clone(),
        };
        set.r2.push(r2);
        set.r3.push(r3);
    }
    set
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexer::tokenize;

    fn reps(src: &str) -> RepresentationSet {
        representations(&tokenize(src).unwrap())
    }

    fn words(v: &[String]) -> Vec<&str> {
        v.iter().map(String::as_str).collect()
    }

    #[test]
    fn identifiers_abstracted_at_r2() {
        assert_eq!(words(&reps("tmp = a").r2), ["ID", "=", "ID"]);
    }

    #[test]
    fn literals_abstracted_at_r3() {
        let r = reps("x = 1");
        assert_eq!(words(&r.r2), ["ID", "=", "1"]);
        assert_eq!(words(&r.r3), ["ID", "=", "LIT"]);
    }

    #[test]
    fn keywords_survive_every_level() {
        let r = reps("for i in range(10):");
        assert_eq!(words(&r.r0), ["for", "i", "in", "range", "(", "10", ")", ":"]);
        assert_eq!(words(&r.r3), ["for", "ID", "in", "ID", "(", "LIT", ")", ":"]);
        let r = reps("x = None if y else True");
        assert!(r.r3.contains(&"None".to_string()));
        assert!(r.r3.contains(&"True".to_string()));
    }

    #[test]
    fn r1_drops_line_breaks_only() {
        let r = reps("a = 1\nb = 2\n");
        assert_eq!(r.r0.len(), 8);
        assert_eq!(words(&r.r1), ["a", "=", "1", "b", "=", "2"]);
        assert_eq!(r.r1.len(), r.r2.len());
        assert_eq!(r.r2.len(), r.r3.len());
    }

    #[test]
    fn consistent_renaming_gives_identical_r2() {
        let a = reps("temp = a\na = b\nb = temp\n");
        let b = reps("saved = x\nx = y\ny = saved\n");
        assert_ne!(a.r0, b.r0);
        assert_eq!(a.r2, b.r2);
        assert_eq!(a.r3, b.r3);
    }

    #[test]
    fn literal_changes_give_identical_r3() {
        let a = reps("limit = 10\nname = 'a'\n");
        let b = reps("limit = 99\nname = \"zzz\"\n");
        assert_ne!(a.r2, b.r2);
        assert_eq!(a.r3, b.r3);
    }
}
