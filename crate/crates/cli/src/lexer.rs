//! Tokenizer for the session language.

use crate::error::SyntaxError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(String),
    /// `# expect: …` comment body, trimmed.
    Expect(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Semi,
    Colon,
    Comma,
    Eq,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Dot,
    Bar,
    Underscore,
    Bang,
    Arrow,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Int(s) => format!("integer `{s}`"),
            Tok::Expect(_) => "expect annotation".to_string(),
            other => format!("`{}`", other.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::Semi => ";",
            Tok::Colon => ":",
            Tok::Comma => ",",
            Tok::Eq => "=",
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Slash => "/",
            Tok::Caret => "^",
            Tok::Dot => ".",
            Tok::Bar => "|",
            Tok::Underscore => "_",
            Tok::Bang => "!",
            Tok::Arrow => "->",
            Tok::Ident(_) | Tok::Int(_) | Tok::Expect(_) => "",
        }
    }
}

/// One-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl std::fmt::Display for Pos {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

pub fn tokenize(src: &str) -> Result<Vec<Token>, SyntaxError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        let mut advance = |n: usize, i: &mut usize| {
            *i += n;
            col += n;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => advance(1, &mut i),
            '#' => {
                let start = i + 1;
                let mut end = start;
                while end < chars.len() && chars[end] != '\n' {
                    end += 1;
                }
                let body: String = chars[start..end].iter().collect();
                if let Some(rest) = body.trim_start().strip_prefix("expect:") {
                    out.push(Token {
                        tok: Tok::Expect(rest.trim().to_string()),
                        pos,
                    });
                }
                advance(end - i, &mut i);
            }
            c if c.is_ascii_alphabetic() => {
                let mut end = i;
                while end < chars.len() && (chars[end].is_ascii_alphanumeric() || chars[end] == '_') {
                    end += 1;
                }
                out.push(Token {
                    tok: Tok::Ident(chars[i..end].iter().collect()),
                    pos,
                });
                advance(end - i, &mut i);
            }
            c if c.is_ascii_digit() => {
                let mut end = i;
                while end < chars.len() && chars[end].is_ascii_digit() {
                    end += 1;
                }
                if end < chars.len() && chars[end] == '.' && chars.get(end + 1).is_some_and(char::is_ascii_digit) {
                    return Err(SyntaxError::new(pos, "decimal literals are not accepted; write p/q"));
                }
                out.push(Token {
                    tok: Tok::Int(chars[i..end].iter().collect()),
                    pos,
                });
                advance(end - i, &mut i);
            }
            '-' if chars.get(i + 1) == Some(&'>') => {
                out.push(Token { tok: Tok::Arrow, pos });
                advance(2, &mut i);
            }
            _ => {
                let tok = match c {
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    ';' => Tok::Semi,
                    ':' => Tok::Colon,
                    ',' => Tok::Comma,
                    '=' => Tok::Eq,
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    '.' => Tok::Dot,
                    '|' => Tok::Bar,
                    '_' => Tok::Underscore,
                    '!' => Tok::Bang,
                    other => {
                        return Err(SyntaxError::new(pos, format!("unexpected character `{other}`")))
                    }
                };
                out.push(Token { tok, pos });
                advance(1, &mut i);
            }
        }
    }
    Ok(out)
}
