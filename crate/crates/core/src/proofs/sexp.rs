//! A minimal S-expression reader for the verification case files. Atoms are
//! bare symbols (any run of characters outside whitespace, parentheses, and
//! quotes) or double-quoted strings with `\"` and `\\` escapes.

use crate::error::Error;
use crate::Result;

#[derive(Debug, Clone, PartialEq)]
pub enum Sexp {
    Sym(String),
    Str(String),
    List(Vec<Sexp>),
}

impl Sexp {
    pub fn sym(&self) -> Option<&str> {
        match self {
            Sexp::Sym(s) => Some(s),
            _ => None,
        }
    }

    pub fn str(&self) -> Option<&str> {
        match self {
            Sexp::Str(s) => Some(s),
            _ => None,
        }
    }

    pub fn list(&self) -> Option<&[Sexp]> {
        match self {
            Sexp::List(items) => Some(items),
            _ => None,
        }
    }

    pub fn int(&self) -> Option<i64> {
        self.sym()?.parse().ok()
    }

    /// For a list starting with the given head symbol, the remaining items.
    pub fn tagged(&self, head: &str) -> Option<&[Sexp]> {
        let items = self.list()?;
        if items.first()?.sym()? == head {
            Some(&items[1..])
        } else {
            None
        }
    }
}

struct Reader<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Reader<'a> {
    fn new(text: &'a str) -> Reader<'a> {
        Reader {
            chars: text.chars().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            line: self.line,
            col: self.col,
            msg: msg.to_string(),
        }
    }

    fn skip_space(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn read(&mut self) -> Result<Sexp> {
        self.skip_space();
        match self.chars.peek() {
            None => Err(self.error("unexpected end of input")),
            Some('(') => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_space();
                    match self.chars.peek() {
                        None => return Err(self.error("unclosed list")),
                        Some(')') => {
                            self.bump();
                            return Ok(Sexp::List(items));
                        }
                        Some(_) => items.push(self.read()?),
                    }
                }
            }
            Some(')') => Err(self.error("unmatched closing parenthesis")),
            Some('"') => {
                self.bump();
                let mut s = String::new();
                loop {
                    match self.bump() {
                        None => return Err(self.error("unterminated string")),
                        Some('"') => return Ok(Sexp::Str(s)),
                        Some('\\') => match self.bump() {
                            Some('"') => s.push('"'),
                            Some('\\') => s.push('\\'),
                            _ => return Err(self.error("unknown string escape")),
                        },
                        Some(c) => s.push(c),
                    }
                }
            }
            Some(_) => {
                let mut s = String::new();
                while let Some(&c) = self.chars.peek() {
                    if c.is_whitespace() || c == '(' || c == ')' || c == '"' {
                        break;
                    }
                    s.push(c);
                    self.bump();
                }
                Ok(Sexp::Sym(s))
            }
        }
    }
}

/// Read a single S-expression covering the whole input.
pub fn parse(text: &str) -> Result<Sexp> {
    let mut r = Reader::new(text);
    let v = r.read()?;
    r.skip_space();
    if r.chars.peek().is_some() {
        return Err(r.error("trailing input after expression"));
    }
    Ok(v)
}

/// Quote a string for embedding in a case file.
pub fn quote_str(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            _ => out.push(c),
        }
    }
    out.push('"');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_nested_lists_symbols_and_strings() {
        let v = parse("(record r1 (quote \"a \\\"b\\\" c\") (lhs -1/2*m*z^2))").unwrap();
        let items = v.list().unwrap();
        assert_eq!(items[0].sym(), Some("record"));
        assert_eq!(items[1].sym(), Some("r1"));
        assert_eq!(items[2].tagged("quote").unwrap()[0].str(), Some("a \"b\" c"));
        assert_eq!(items[3].tagged("lhs").unwrap()[0].sym(), Some("-1/2*m*z^2"));
    }

    #[test]
    fn reports_positions_for_malformed_input() {
        match parse("(a\n  (b)") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse("(a) extra").is_err());
        assert!(parse(")").is_err());
    }
}
