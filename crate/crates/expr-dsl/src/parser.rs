//! Parser for identity files.
//!
//! One identity per block:
//!
//! ```text
//! identity thm4.two-term {        # comments run to end of line
//!   vars: x, y;
//!   level: delta22;               # exact | mod-products | delta22 | numeric
//!   expect: pass;                 # pass | proxy-pass | fail (default pass)
//!   cost: cheap;                  # cheap | heavy (default cheap)
//!   tags: thm4, depth2;
//!   expr: 1*I(3,1)[x, y] - I(3,1)[1-x, 1-y];
//! }
//! ```

use crate::ast::*;
use crate::field::DslError;
use exact_kernel::Rat;
use symbol_engine::AtomKind;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Colon,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Lexer<'a> {
        Lexer { src: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.src.get(self.pos).copied()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    /// Raw read until one of `stops`, trimming whitespace; used for metadata
    /// values that may contain dashes (levels, tags, names).
    fn raw_until(&mut self, stops: &[u8]) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if stops.contains(&c) {
                break;
            }
            if c == b'#' {
                while let Some(c2) = self.peek() {
                    if c2 == b'\n' {
                        break;
                    }
                    self.bump();
                }
                continue;
            }
            self.bump();
            s.push(c as char);
        }
        s.trim().to_string()
    }

    fn skip_ws(&mut self) {
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_whitespace() => {
                    self.bump();
                }
                Some(b'#') => {
                    while let Some(c) = self.peek() {
                        if c == b'\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                _ => break,
            }
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T, DslError> {
        Err(DslError::Parse { line: self.line, col: self.col, msg: msg.to_string() })
    }

    fn next_tok(&mut self) -> Result<Option<Spanned>, DslError> {
        self.skip_ws();
        let (line, col) = (self.line, self.col);
        let c = match self.peek() {
            Some(c) => c,
            None => return Ok(None),
        };
        let tok = match c {
            b'{' => {
                self.bump();
                Tok::LBrace
            }
            b'}' => {
                self.bump();
                Tok::RBrace
            }
            b'(' => {
                self.bump();
                Tok::LParen
            }
            b')' => {
                self.bump();
                Tok::RParen
            }
            b'[' => {
                self.bump();
                Tok::LBracket
            }
            b']' => {
                self.bump();
                Tok::RBracket
            }
            b',' => {
                self.bump();
                Tok::Comma
            }
            b';' => {
                self.bump();
                Tok::Semi
            }
            b':' => {
                self.bump();
                Tok::Colon
            }
            b'+' => {
                self.bump();
                Tok::Plus
            }
            b'-' => {
                self.bump();
                Tok::Minus
            }
            b'*' => {
                self.bump();
                Tok::Star
            }
            b'/' => {
                self.bump();
                Tok::Slash
            }
            b'^' => {
                self.bump();
                Tok::Caret
            }
            b'0'..=b'9' => {
                let mut n: i64 = 0;
                while let Some(d) = self.peek() {
                    if d.is_ascii_digit() {
                        n = n * 10 + (d - b'0') as i64;
                        self.bump();
                    } else {
                        break;
                    }
                }
                Tok::Int(n)
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let mut s = String::new();
                while let Some(d) = self.peek() {
                    if d.is_ascii_alphanumeric() || d == b'_' {
                        s.push(d as char);
                        self.bump();
                    } else {
                        break;
                    }
                }
                Tok::Ident(s)
            }
            _ => return self.err(&format!("unexpected character `{}`", c as char)),
        };
        Ok(Some(Spanned { tok, line, col }))
    }
}

pub struct Parser<'a> {
    lx: Lexer<'a>,
    peeked: Option<Option<Spanned>>,
}

impl<'a> Parser<'a> {
    pub fn new(src: &'a str) -> Parser<'a> {
        Parser { lx: Lexer::new(src), peeked: None }
    }

    fn next(&mut self) -> Result<Option<Spanned>, DslError> {
        match self.peeked.take() {
            Some(t) => Ok(t),
            None => self.lx.next_tok(),
        }
    }

    fn peek(&mut self) -> Result<Option<&Spanned>, DslError> {
        if self.peeked.is_none() {
            self.peeked = Some(self.lx.next_tok()?);
        }
        Ok(self.peeked.as_ref().unwrap().as_ref())
    }

    fn err_at<T>(&self, sp: Option<&Spanned>, msg: &str) -> Result<T, DslError> {
        let (line, col) = sp.map(|s| (s.line, s.col)).unwrap_or((self.lx.line, self.lx.col));
        Err(DslError::Parse { line, col, msg: msg.to_string() })
    }

    fn expect(&mut self, t: Tok) -> Result<(), DslError> {
        let got = self.next()?;
        match got {
            Some(ref s) if s.tok == t => Ok(()),
            ref other => self.err_at(
                other.as_ref(),
                &format!("expected {:?}, got {:?}", t, other.as_ref().map(|s| &s.tok)),
            ),
        }
    }

    fn expect_ident(&mut self) -> Result<String, DslError> {
        let got = self.next()?;
        match got {
            Some(Spanned { tok: Tok::Ident(s), .. }) => Ok(s),
            ref other => self.err_at(other.as_ref(), "expected identifier"),
        }
    }

    fn expect_int(&mut self) -> Result<i64, DslError> {
        let got = self.next()?;
        match got {
            Some(Spanned { tok: Tok::Int(n), .. }) => Ok(n),
            ref other => self.err_at(other.as_ref(), "expected integer"),
        }
    }

    fn eat(&mut self, t: &Tok) -> Result<bool, DslError> {
        if let Some(s) = self.peek()? {
            if &s.tok == t {
                self.next()?;
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Parse a whole file of identity blocks.
    pub fn parse_all(&mut self) -> Result<Vec<Template>, DslError> {
        let mut out = Vec::new();
        loop {
            self.lx.skip_ws();
            if self.peeked.is_none() && self.lx.peek().is_none() {
                break;
            }
            match self.peek()? {
                None => break,
                Some(s) if s.tok == Tok::Ident("identity".to_string()) => {
                    out.push(self.parse_identity_block()?);
                }
                other => {
                    let o = other.cloned();
                    return self.err_at(o.as_ref(), "expected `identity`");
                }
            }
        }
        Ok(out)
    }

    fn parse_identity_block(&mut self) -> Result<Template, DslError> {
        self.expect(Tok::Ident("identity".to_string()))?;
        // Names may contain dots and dashes; read raw.
        self.lx.skip_ws();
        let name = self.lx.raw_until(&[b'{', b' ', b'\t', b'\n']);
        if name.is_empty() {
            return self.lx.err("missing identity name");
        }
        self.expect(Tok::LBrace)?;
        let mut vars: Vec<String> = Vec::new();
        let mut level: Option<Level> = None;
        let mut expect_v = Expect::Pass;
        let mut cost = Cost::Cheap;
        let mut tags: Vec<String> = Vec::new();
        let mut tolerance: Option<f64> = None;
        let mut expr: Option<Expr> = None;
        loop {
            if self.eat(&Tok::RBrace)? {
                break;
            }
            let key = self.expect_ident()?;
            self.expect(Tok::Colon)?;
            match key.as_str() {
                "vars" => {
                    let raw = self.lx.raw_until(&[b';']);
                    self.expect(Tok::Semi)?;
                    vars = raw.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
                }
                "level" => {
                    let raw = self.lx.raw_until(&[b';']);
                    self.expect(Tok::Semi)?;
                    level = Some(match raw.as_str() {
                        "exact" => Level::Exact,
                        "mod-products" => Level::ModProducts,
                        "delta22" => Level::Delta22,
                        "numeric" => Level::Numeric,
                        other => return self.lx.err(&format!("unknown level `{}`", other)),
                    });
                }
                "expect" => {
                    let raw = self.lx.raw_until(&[b';']);
                    self.expect(Tok::Semi)?;
                    expect_v = match raw.as_str() {
                        "pass" => Expect::Pass,
                        "proxy-pass" => Expect::ProxyPass,
                        "fail" => Expect::Fail,
                        other => return self.lx.err(&format!("unknown expectation `{}`", other)),
                    };
                }
                "cost" => {
                    let raw = self.lx.raw_until(&[b';']);
                    self.expect(Tok::Semi)?;
                    cost = match raw.as_str() {
                        "cheap" => Cost::Cheap,
                        "heavy" => Cost::Heavy,
                        other => return self.lx.err(&format!("unknown cost `{}`", other)),
                    };
                }
                "tags" => {
                    let raw = self.lx.raw_until(&[b';']);
                    self.expect(Tok::Semi)?;
                    tags = raw.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
                }
                "tolerance" => {
                    let raw = self.lx.raw_until(&[b';']);
                    self.expect(Tok::Semi)?;
                    tolerance = Some(
                        raw.parse::<f64>()
                            .map_err(|_| DslError::Parse {
                                line: self.lx.line,
                                col: self.lx.col,
                                msg: format!("bad tolerance `{}`", raw),
                            })?,
                    );
                }
                "expr" => {
                    let e = self.parse_sum()?;
                    self.expect(Tok::Semi)?;
                    expr = Some(e);
                }
                other => return self.lx.err(&format!("unknown field `{}`", other)),
            }
        }
        let level = match level {
            Some(l) => l,
            None => return self.lx.err("missing level"),
        };
        let expr = match expr {
            Some(e) => e,
            None => return self.lx.err("missing expr"),
        };
        Ok(Template { name, vars, level, expect: expect_v, cost, tags, tolerance, expr })
    }

    fn parse_sum(&mut self) -> Result<Expr, DslError> {
        let mut terms = Vec::new();
        let mut sign = Rat::ONE;
        if self.eat(&Tok::Minus)? {
            sign = Rat::int(-1);
        } else {
            let _ = self.eat(&Tok::Plus)?;
        }
        loop {
            let (c, t) = self.parse_term()?;
            terms.push((sign * c, t));
            if self.eat(&Tok::Plus)? {
                sign = Rat::ONE;
            } else if self.eat(&Tok::Minus)? {
                sign = Rat::int(-1);
            } else {
                break;
            }
        }
        Ok(Expr { terms })
    }

    /// `term := [rational '*'] unit | rational-coefficient unit`
    fn parse_term(&mut self) -> Result<(Rat, Term), DslError> {
        let mut coeff = Rat::ONE;
        if let Some(Spanned { tok: Tok::Int(_), .. }) = self.peek()? {
            let n = self.expect_int()?;
            let mut c = Rat::int(n);
            if self.eat(&Tok::Slash)? {
                let d = self.expect_int()?;
                c = Rat::new(n, d);
            }
            coeff = c;
            self.expect(Tok::Star)?;
        }
        let t = self.parse_unit()?;
        Ok((coeff, t))
    }

    fn parse_unit(&mut self) -> Result<Term, DslError> {
        let head = self.expect_ident()?;
        match head.as_str() {
            "I" | "Li" => {
                let kind = if head == "I" { AtomKind::I } else { AtomKind::Li };
                let (indices, args) = self.parse_indices_args()?;
                Ok(Term::Atom { kind, indices, args })
            }
            "pts" => {
                let (indices, points) = self.parse_indices_args()?;
                Ok(Term::Pts { indices, points })
            }
            "cyc4" => {
                self.expect(Tok::LParen)?;
                let indices = self.parse_int_list(&Tok::Semi)?;
                let pre = self.parse_arg_list_until(&Tok::Semi)?;
                let cycled = self.parse_arg_list_until(&Tok::Semi)?;
                let post = self.parse_arg_list_until(&Tok::RParen)?;
                Ok(Term::Cyc4 { indices, pre, cycled, post })
            }
            "prod" | "tens" => {
                self.expect(Tok::LParen)?;
                let mut fs = Vec::new();
                loop {
                    fs.push(self.parse_factor()?);
                    if !self.eat(&Tok::Comma)? {
                        break;
                    }
                }
                self.expect(Tok::RParen)?;
                if head == "prod" {
                    Ok(Term::Prod(fs))
                } else {
                    Ok(Term::Tens(fs))
                }
            }
            "orbit" => {
                self.expect(Tok::LParen)?;
                let gname = self.expect_ident()?;
                let group = match gname.as_str() {
                    "sym" => GroupSpec::Sym(self.expect_int()? as usize),
                    "cyc" => GroupSpec::Cyc(self.expect_int()? as usize),
                    other => return self.lx.err(&format!("unknown group `{}`", other)),
                };
                self.expect(Tok::Comma)?;
                let mode = self.expect_ident()?;
                let signed = match mode.as_str() {
                    "signed" => true,
                    "plain" => false,
                    other => return self.lx.err(&format!("unknown orbit mode `{}`", other)),
                };
                self.expect(Tok::Semi)?;
                let mut points = Vec::new();
                loop {
                    points.push(self.expect_ident()?);
                    if !self.eat(&Tok::Comma)? {
                        break;
                    }
                }
                self.expect(Tok::Semi)?;
                let body = self.parse_sum()?;
                self.expect(Tok::RParen)?;
                Ok(Term::Orbit { group, signed, points, body: Box::new(body) })
            }
            other => self.lx.err(&format!("unknown term head `{}`", other)),
        }
    }

    fn parse_factor(&mut self) -> Result<Factor, DslError> {
        let head = self.expect_ident()?;
        match head.as_str() {
            "I" | "Li" => {
                let kind = if head == "I" { AtomKind::I } else { AtomKind::Li };
                let (indices, args) = self.parse_indices_args()?;
                Ok(Factor::Atom { kind, indices, args })
            }
            "log" => {
                self.expect(Tok::LBracket)?;
                let a = self.parse_arg()?;
                self.expect(Tok::RBracket)?;
                Ok(Factor::Log(a))
            }
            other => self.lx.err(&format!("unknown factor head `{}`", other)),
        }
    }

    fn parse_indices_args(&mut self) -> Result<(Vec<u32>, Vec<ArgExpr>), DslError> {
        self.expect(Tok::LParen)?;
        let indices = self.parse_int_list(&Tok::RParen)?;
        self.expect(Tok::LBracket)?;
        let args = self.parse_arg_list_until(&Tok::RBracket)?;
        Ok((indices, args))
    }

    fn parse_int_list(&mut self, stop: &Tok) -> Result<Vec<u32>, DslError> {
        let mut out = Vec::new();
        loop {
            out.push(self.expect_int()? as u32);
            if !self.eat(&Tok::Comma)? {
                break;
            }
        }
        self.expect(stop.clone())?;
        Ok(out)
    }

    fn parse_arg_list_until(&mut self, stop: &Tok) -> Result<Vec<ArgExpr>, DslError> {
        let mut out = Vec::new();
        if self.eat(stop)? {
            return Ok(out);
        }
        loop {
            out.push(self.parse_arg()?);
            if !self.eat(&Tok::Comma)? {
                break;
            }
        }
        self.expect(stop.clone())?;
        Ok(out)
    }

    /// `arg := sum of products of powers of primaries`
    pub fn parse_arg(&mut self) -> Result<ArgExpr, DslError> {
        let mut acc = self.parse_arg_mul()?;
        loop {
            if self.eat(&Tok::Plus)? {
                let rhs = self.parse_arg_mul()?;
                acc = ArgExpr::Add(Box::new(acc), Box::new(rhs));
            } else if self.eat(&Tok::Minus)? {
                let rhs = self.parse_arg_mul()?;
                acc = ArgExpr::Sub(Box::new(acc), Box::new(rhs));
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn parse_arg_mul(&mut self) -> Result<ArgExpr, DslError> {
        let mut acc = self.parse_arg_pow()?;
        loop {
            if self.eat(&Tok::Star)? {
                let rhs = self.parse_arg_pow()?;
                acc = ArgExpr::Mul(Box::new(acc), Box::new(rhs));
            } else if self.eat(&Tok::Slash)? {
                let rhs = self.parse_arg_pow()?;
                acc = ArgExpr::Div(Box::new(acc), Box::new(rhs));
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn parse_arg_pow(&mut self) -> Result<ArgExpr, DslError> {
        let base = self.parse_arg_primary()?;
        if self.eat(&Tok::Caret)? {
            let neg = self.eat(&Tok::Minus)?;
            let e = self.expect_int()? as i32;
            let e = if neg { -e } else { e };
            return Ok(ArgExpr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn parse_arg_primary(&mut self) -> Result<ArgExpr, DslError> {
        let sp = self.next()?;
        match sp {
            Some(Spanned { tok: Tok::Int(n), .. }) => Ok(ArgExpr::Num(Rat::int(n))),
            Some(Spanned { tok: Tok::Minus, .. }) => {
                let inner = self.parse_arg_pow()?;
                Ok(ArgExpr::Neg(Box::new(inner)))
            }
            Some(Spanned { tok: Tok::LParen, .. }) => {
                let inner = self.parse_arg()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Some(Spanned { tok: Tok::Ident(name), .. }) => match name.as_str() {
                "inf" => Ok(ArgExpr::Inf),
                "cr" => {
                    self.expect(Tok::LParen)?;
                    let args = self.parse_arg_list_until(&Tok::RParen)?;
                    if args.len() != 4 {
                        return self.lx.err("cr takes four points");
                    }
                    let mut it = args.into_iter();
                    Ok(ArgExpr::Cr(Box::new([
                        it.next().unwrap(),
                        it.next().unwrap(),
                        it.next().unwrap(),
                        it.next().unwrap(),
                    ])))
                }
                "V0" => {
                    self.expect(Tok::LParen)?;
                    let x = self.parse_arg()?;
                    self.expect(Tok::Comma)?;
                    let y = self.parse_arg()?;
                    self.expect(Tok::RParen)?;
                    Ok(ArgExpr::V0(Box::new(x), Box::new(y)))
                }
                "spl" => {
                    self.expect(Tok::LParen)?;
                    let e = self.parse_arg()?;
                    self.expect(Tok::Semi)?;
                    let quad = self.parse_arg_list_until(&Tok::RParen)?;
                    if quad.len() != 4 {
                        return self.lx.err("spl takes a point and four entries");
                    }
                    let mut it = quad.into_iter();
                    Ok(ArgExpr::SplCr(
                        Box::new(e),
                        Box::new([
                            it.next().unwrap(),
                            it.next().unwrap(),
                            it.next().unwrap(),
                            it.next().unwrap(),
                        ]),
                    ))
                }
                _ => {
                    // Macro call or plain point.
                    if let Some(Spanned { tok: Tok::LParen, .. }) = self.peek()? {
                        self.next()?;
                        let args = self.parse_arg_list_until(&Tok::RParen)?;
                        Ok(ArgExpr::Call(name, args))
                    } else {
                        Ok(ArgExpr::Point(name))
                    }
                }
            },
            other => self.err_at(other.as_ref(), "expected argument expression"),
        }
    }
}

/// Parse a file of identity blocks.
pub fn parse_file(src: &str) -> Result<Vec<Template>, DslError> {
    Parser::new(src).parse_all()
}

/// Parse a single identity block.
pub fn parse_identity(src: &str) -> Result<Template, DslError> {
    let mut all = parse_file(src)?;
    if all.len() != 1 {
        return Err(DslError::Parse {
            line: 1,
            col: 1,
            msg: format!("expected one identity, found {}", all.len()),
        });
    }
    Ok(all.pop().unwrap())
}
