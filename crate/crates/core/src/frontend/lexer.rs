//! Tokens of the `.solv` script format.

use num_bigint::BigInt;

use super::ast::Pos;
use super::ScriptError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    Arrow,
    Newline,
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
    /// Byte offset of the first character and one past the last.
    pub start: usize,
    pub end: usize,
}

const SYMBOLS: &str = "+-*/^=()[]{},:;";

/// Splits a script into tokens. Newlines are kept as statement separators
/// except inside brackets; `#` starts a comment.
pub fn lex(src: &str) -> Result<Vec<Token>, ScriptError> {
    let mut out = Vec::new();
    let mut depth: i32 = 0;
    let mut line = 1;
    let mut line_start = 0;
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = src[i..].chars().next().expect("in bounds");
        let pos = Pos {
            line,
            col: src[line_start..i].chars().count() + 1,
        };
        let start = i;
        if c == '\n' {
            if depth == 0 {
                out.push(Token {
                    tok: Tok::Newline,
                    pos,
                    start,
                    end: i + 1,
                });
            }
            i += 1;
            line += 1;
            line_start = i;
        } else if c.is_whitespace() {
            i += c.len_utf8();
        } else if c == '#' {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("digits");
            out.push(Token {
                tok: Tok::Int(n),
                pos,
                start,
                end: i,
            });
        } else if c.is_alphabetic() || c == '_' {
            i += c.len_utf8();
            while let Some(d) = src[i..].chars().next() {
                if d.is_alphanumeric() || d == '_' || d == '\'' {
                    i += d.len_utf8();
                } else {
                    break;
                }
            }
            out.push(Token {
                tok: Tok::Ident(src[start..i].to_string()),
                pos,
                start,
                end: i,
            });
        } else if c == '-' && bytes.get(i + 1) == Some(&b'>') {
            i += 2;
            out.push(Token {
                tok: Tok::Arrow,
                pos,
                start,
                end: i,
            });
        } else if SYMBOLS.contains(c) {
            match c {
                '(' | '[' | '{' => depth += 1,
                ')' | ']' | '}' => depth -= 1,
                _ => {}
            }
            i += 1;
            out.push(Token {
                tok: Tok::Sym(c),
                pos,
                start,
                end: i,
            });
        } else {
            return Err(ScriptError::new(pos, format!("unexpected character '{c}'")));
        }
    }
    let pos = Pos {
        line,
        col: src[line_start..].chars().count() + 1,
    };
    out.push(Token {
        tok: Tok::Newline,
        pos,
        start: src.len(),
        end: src.len(),
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_and_brackets() {
        let toks = lex("rel d*x = x*d + 1 # comment\nideal I = [x,\n d]\n").unwrap();
        let newlines = toks.iter().filter(|t| t.tok == Tok::Newline).count();
        assert_eq!(newlines, 3);
        assert_eq!(toks[0].tok, Tok::Ident("rel".into()));
        assert_eq!(toks[2].tok, Tok::Sym('*'));
        assert!(lex("x $ y").is_err());
        let arrow = lex("free 2 -> free 1").unwrap();
        assert!(arrow.iter().any(|t| t.tok == Tok::Arrow));
    }
}
