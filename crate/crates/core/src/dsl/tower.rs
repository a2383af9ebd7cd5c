//! Tower files: one declaration per line, `#` starts a comment.
//!
//! ```text
//! group Zx = Z(x)
//! group Zy = Z(y)
//! subgroup A = cyclic(Zx: x^2, Zy: y^3)
//! group T = amalgam(Zx, Zy, A, variant=1)
//! map e = exponents(T: x=3, y=2)
//! subgroup A2 = modkernel(T, e, p=2)
//! group X2 = amalgam(T, T, A2, variant=1)
//! ```

use std::fmt;

use thiserror::Error;

use crate::amalgam::Variant;
use crate::group::{Group, OrderedGroup};
use crate::stepping::{ExponentMap, SteppingSubgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagnosticKind {
    Syntax,
    UnknownIdentifier,
    Duplicate,
    /// A constructor rejected its arguments.
    Validation,
}

/// A located error in a tower file. Lines and columns are 1-based.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("{line}:{col}: {message}")]
pub struct Diagnostic {
    pub line: usize,
    pub col: usize,
    pub kind: DiagnosticKind,
    pub message: String,
}

/// An identifier with its position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ident {
    pub name: String,
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupDef {
    Cyclic { generator: Ident },
    Amalgam {
        left: Ident,
        right: Ident,
        subgroup: Ident,
        variant: i64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubgroupDef {
    Cyclic {
        left: Ident,
        left_gen: Ident,
        p: i64,
        right: Ident,
        right_gen: Ident,
        q: i64,
    },
    ModKernel { group: Ident, map: Ident, p: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapDef {
    pub group: Ident,
    pub assignments: Vec<(Ident, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decl {
    Group(Ident, GroupDef),
    Subgroup(Ident, SubgroupDef),
    Map(Ident, MapDef),
}

impl Decl {
    pub fn id(&self) -> &Ident {
        match self {
            Decl::Group(id, _) | Decl::Subgroup(id, _) | Decl::Map(id, _) => id,
        }
    }
}

/// The declarations of a tower file, in order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TowerFile {
    pub decls: Vec<Decl>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    Punct(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    col: usize,
}

fn syntax(line: usize, col: usize, message: impl Into<String>) -> Diagnostic {
    Diagnostic {
        line,
        col,
        kind: DiagnosticKind::Syntax,
        message: message.into(),
    }
}

fn lex(line_no: usize, line: &str) -> Result<Vec<Token>, Diagnostic> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '.') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                col,
            });
        } else if c.is_ascii_digit() || (c == '-' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            let start = i;
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let value = text
                .parse::<i64>()
                .map_err(|_| syntax(line_no, col, format!("integer `{text}` is out of range")))?;
            out.push(Token { tok: Tok::Int(value), col });
        } else if "=(),:^".contains(c) {
            out.push(Token { tok: Tok::Punct(c), col });
            i += 1;
        } else {
            return Err(syntax(line_no, col, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct LineParser {
    line: usize,
    end_col: usize,
    toks: Vec<Token>,
    pos: usize,
}

impl LineParser {
    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.col)
    }

    fn describe(&self) -> String {
        match self.toks.get(self.pos).map(|t| &t.tok) {
            None => "end of line".into(),
            Some(Tok::Ident(s)) => format!("`{s}`"),
            Some(Tok::Int(n)) => format!("`{n}`"),
            Some(Tok::Punct(c)) => format!("'{c}'"),
        }
    }

    fn fail<T>(&self, expected: &str) -> Result<T, Diagnostic> {
        Err(syntax(
            self.line,
            self.col(),
            format!("expected {expected}, found {}", self.describe()),
        ))
    }

    fn ident(&mut self) -> Result<Ident, Diagnostic> {
        match self.toks.get(self.pos) {
            Some(Token { tok: Tok::Ident(s), col }) => {
                let id = Ident {
                    name: s.clone(),
                    line: self.line,
                    col: *col,
                };
                self.pos += 1;
                Ok(id)
            }
            _ => self.fail("an identifier"),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), Diagnostic> {
        match self.toks.get(self.pos) {
            Some(Token { tok: Tok::Ident(s), .. }) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => self.fail(&format!("`{kw}`")),
        }
    }

    fn punct(&mut self, c: char) -> Result<(), Diagnostic> {
        match self.toks.get(self.pos) {
            Some(Token { tok: Tok::Punct(p), .. }) if *p == c => {
                self.pos += 1;
                Ok(())
            }
            _ => self.fail(&format!("'{c}'")),
        }
    }

    fn peek_punct(&self, c: char) -> bool {
        matches!(self.toks.get(self.pos), Some(Token { tok: Tok::Punct(p), .. }) if *p == c)
    }

    fn int(&mut self) -> Result<i64, Diagnostic> {
        match self.toks.get(self.pos) {
            Some(Token { tok: Tok::Int(n), .. }) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            _ => self.fail("an integer"),
        }
    }

    fn end(&self) -> Result<(), Diagnostic> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            self.fail("end of line")
        }
    }

    /// `<gen>^<int>`, the generator part of a cyclic subgroup.
    fn power(&mut self) -> Result<(Ident, i64), Diagnostic> {
        let g = self.ident()?;
        self.punct('^')?;
        Ok((g, self.int()?))
    }

    fn decl(&mut self) -> Result<Decl, Diagnostic> {
        let kind = self.ident()?;
        match kind.name.as_str() {
            "group" => {
                let id = self.ident()?;
                self.punct('=')?;
                let ctor = self.ident()?;
                self.punct('(')?;
                let def = match ctor.name.as_str() {
                    "Z" => GroupDef::Cyclic {
                        generator: self.ident()?,
                    },
                    "amalgam" => {
                        let left = self.ident()?;
                        self.punct(',')?;
                        let right = self.ident()?;
                        self.punct(',')?;
                        let subgroup = self.ident()?;
                        self.punct(',')?;
                        self.keyword("variant")?;
                        self.punct('=')?;
                        let variant = self.int()?;
                        GroupDef::Amalgam {
                            left,
                            right,
                            subgroup,
                            variant,
                        }
                    }
                    other => {
                        return Err(syntax(
                            self.line,
                            ctor.col,
                            format!("unknown group constructor `{other}`, expected `Z` or `amalgam`"),
                        ))
                    }
                };
                self.punct(')')?;
                self.end()?;
                Ok(Decl::Group(id, def))
            }
            "subgroup" => {
                let id = self.ident()?;
                self.punct('=')?;
                let ctor = self.ident()?;
                self.punct('(')?;
                let def = match ctor.name.as_str() {
                    "cyclic" => {
                        let left = self.ident()?;
                        self.punct(':')?;
                        let (left_gen, p) = self.power()?;
                        self.punct(',')?;
                        let right = self.ident()?;
                        self.punct(':')?;
                        let (right_gen, q) = self.power()?;
                        SubgroupDef::Cyclic {
                            left,
                            left_gen,
                            p,
                            right,
                            right_gen,
                            q,
                        }
                    }
                    "modkernel" => {
                        let group = self.ident()?;
                        self.punct(',')?;
                        let map = self.ident()?;
                        self.punct(',')?;
                        self.keyword("p")?;
                        self.punct('=')?;
                        let p = self.int()?;
                        SubgroupDef::ModKernel { group, map, p }
                    }
                    other => {
                        return Err(syntax(
                            self.line,
                            ctor.col,
                            format!("unknown subgroup constructor `{other}`, expected `cyclic` or `modkernel`"),
                        ))
                    }
                };
                self.punct(')')?;
                self.end()?;
                Ok(Decl::Subgroup(id, def))
            }
            "map" => {
                let id = self.ident()?;
                self.punct('=')?;
                self.keyword("exponents")?;
                self.punct('(')?;
                let group = self.ident()?;
                self.punct(':')?;
                let mut assignments = Vec::new();
                loop {
                    let g = self.ident()?;
                    self.punct('=')?;
                    assignments.push((g, self.int()?));
                    if self.peek_punct(',') {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                self.punct(')')?;
                self.end()?;
                Ok(Decl::Map(id, MapDef { group, assignments }))
            }
            other => Err(syntax(
                self.line,
                kind.col,
                format!("unknown declaration `{other}`, expected `group`, `subgroup` or `map`"),
            )),
        }
    }
}

/// Parses a tower file into declarations. Checks syntax only.
pub fn parse_tower(text: &str) -> Result<TowerFile, Diagnostic> {
    let mut decls = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let toks = lex(i + 1, line)?;
        if toks.is_empty() {
            continue;
        }
        let mut p = LineParser {
            line: i + 1,
            end_col: line.chars().count() + 1,
            toks,
            pos: 0,
        };
        decls.push(p.decl()?);
    }
    Ok(TowerFile { decls })
}

/// What an identifier names in a built tower.
#[derive(Clone, Debug)]
pub enum Entity {
    Group(Group),
    Subgroup(SteppingSubgroup),
    Map { group: Group, map: ExponentMap },
}

impl Entity {
    fn kind(&self) -> &'static str {
        match self {
            Entity::Group(_) => "group",
            Entity::Subgroup(_) => "subgroup",
            Entity::Map { .. } => "map",
        }
    }
}

/// A built tower: every declared object, by identifier, in declaration order.
#[derive(Clone, Debug, Default)]
pub struct Tower {
    entries: Vec<(String, Entity)>,
}

impl fmt::Display for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (id, e) in &self.entries {
            writeln!(f, "{} {id}", e.kind())?;
        }
        Ok(())
    }
}

impl Tower {
    pub fn get(&self, id: &str) -> Option<&Entity> {
        self.entries.iter().find(|(n, _)| n == id).map(|(_, e)| e)
    }

    pub fn group(&self, id: &str) -> Option<&Group> {
        match self.get(id) {
            Some(Entity::Group(g)) => Some(g),
            _ => None,
        }
    }

    pub fn subgroup(&self, id: &str) -> Option<&SteppingSubgroup> {
        match self.get(id) {
            Some(Entity::Subgroup(s)) => Some(s),
            _ => None,
        }
    }

    pub fn group_ids(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().filter_map(|(n, e)| match e {
            Entity::Group(_) => Some(n.as_str()),
            _ => None,
        })
    }

    /// The last declared group.
    pub fn last_group(&self) -> Option<&Group> {
        self.entries.iter().rev().find_map(|(_, e)| match e {
            Entity::Group(g) => Some(g),
            _ => None,
        })
    }

    fn lookup(&self, id: &Ident, want: &'static str) -> Result<&Entity, Diagnostic> {
        let found = self.get(&id.name).ok_or_else(|| Diagnostic {
            line: id.line,
            col: id.col,
            kind: DiagnosticKind::UnknownIdentifier,
            message: format!("unknown identifier `{}`", id.name),
        })?;
        if found.kind() != want {
            return Err(validation(
                id,
                format!("`{}` is a {}, expected a {want}", id.name, found.kind()),
            ));
        }
        Ok(found)
    }

    fn lookup_group(&self, id: &Ident) -> Result<&Group, Diagnostic> {
        match self.lookup(id, "group")? {
            Entity::Group(g) => Ok(g),
            _ => unreachable!("lookup checked the kind"),
        }
    }
}

fn validation(at: &Ident, message: impl Into<String>) -> Diagnostic {
    Diagnostic {
        line: at.line,
        col: at.col,
        kind: DiagnosticKind::Validation,
        message: message.into(),
    }
}

/// The generator name of a cyclic group, checked against `gen`.
fn check_cyclic_generator(group: &Group, group_id: &Ident, gen: &Ident) -> Result<(), Diagnostic> {
    let Some(z) = group.as_cyclic() else {
        return Err(validation(
            group_id,
            format!("`{}` is not an infinite cyclic group", group_id.name),
        ));
    };
    if z.generator_name() != gen.name {
        return Err(validation(
            gen,
            format!(
                "`{}` is not the generator of `{}` (its generator is `{}`)",
                gen.name,
                group_id.name,
                z.generator_name()
            ),
        ));
    }
    Ok(())
}

/// Builds every declaration in order, validating constructor arguments.
pub fn build_tower(file: &TowerFile) -> Result<Tower, Diagnostic> {
    let mut tower = Tower::default();
    for decl in &file.decls {
        let id = decl.id();
        if tower.get(&id.name).is_some() {
            return Err(Diagnostic {
                line: id.line,
                col: id.col,
                kind: DiagnosticKind::Duplicate,
                message: format!("`{}` is already defined", id.name),
            });
        }
        let entity = match decl {
            Decl::Group(_, GroupDef::Cyclic { generator }) => Entity::Group(Group::cyclic(&generator.name)),
            Decl::Group(
                _,
                GroupDef::Amalgam {
                    left,
                    right,
                    subgroup,
                    variant,
                },
            ) => {
                let l = tower.lookup_group(left)?;
                let r = tower.lookup_group(right)?;
                let Entity::Subgroup(s) = tower.lookup(subgroup, "subgroup")? else {
                    unreachable!("lookup checked the kind")
                };
                let v = Variant::from_index(*variant)
                    .ok_or_else(|| validation(id, format!("variant must be 1 or 2, got {variant}")))?;
                let g = Group::amalgam(l, r, s.clone(), v).map_err(|e| validation(id, e.to_string()))?;
                Entity::Group(g)
            }
            Decl::Subgroup(
                _,
                SubgroupDef::Cyclic {
                    left,
                    left_gen,
                    p,
                    right,
                    right_gen,
                    q,
                },
            ) => {
                let l = tower.lookup_group(left)?;
                let r = tower.lookup_group(right)?;
                check_cyclic_generator(l, left, left_gen)?;
                check_cyclic_generator(r, right, right_gen)?;
                let s = SteppingSubgroup::cyclic(l, *p, r, *q).map_err(|e| validation(id, e.to_string()))?;
                Entity::Subgroup(s)
            }
            Decl::Subgroup(_, SubgroupDef::ModKernel { group, map, p }) => {
                let g = tower.lookup_group(group)?;
                let Entity::Map { group: mg, map: m } = tower.lookup(map, "map")? else {
                    unreachable!("lookup checked the kind")
                };
                if !mg.same_as(g) {
                    return Err(validation(
                        map,
                        format!("map `{}` is not defined on `{}`", map.name, group.name),
                    ));
                }
                let s = SteppingSubgroup::modkernel(g, m.clone(), *p).map_err(|e| validation(id, e.to_string()))?;
                Entity::Subgroup(s)
            }
            Decl::Map(_, MapDef { group, assignments }) => {
                let g = tower.lookup_group(group)?;
                let known: Vec<String> = g.generators().into_iter().map(|(n, _)| n).collect();
                if let Some((bad, _)) = assignments.iter().find(|(n, _)| !known.contains(&n.name)) {
                    return Err(Diagnostic {
                        line: bad.line,
                        col: bad.col,
                        kind: DiagnosticKind::UnknownIdentifier,
                        message: format!(
                            "`{}` is not a generator of `{}` (generators: {})",
                            bad.name,
                            group.name,
                            known.join(", ")
                        ),
                    });
                }
                let pairs: Vec<(String, i64)> = assignments.iter().map(|(n, v)| (n.name.clone(), *v)).collect();
                let m = ExponentMap::from_assignments(g, &pairs).map_err(|e| validation(id, e.to_string()))?;
                Entity::Map { group: g.clone(), map: m }
            }
        };
        tower.entries.push((id.name.clone(), entity));
    }
    if tower.group_ids().next().is_none() {
        return Err(syntax(
            file.decls.len().max(1),
            1,
            "a tower file must declare at least one group",
        ));
    }
    Ok(tower)
}

/// Parses and builds a tower file.
pub fn load_tower(text: &str) -> Result<Tower, Diagnostic> {
    build_tower(&parse_tower(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "group Zx = Z(x)\ngroup Zy = Z(y)\nsubgroup A = cyclic(Zx: x^2, Zy: y^3)\ngroup T = amalgam(Zx, Zy, A, variant=1)\n";

    #[test]
    fn cyclic_declaration() {
        let f = parse_tower("group Zx = Z(x)").unwrap();
        assert_eq!(f.decls.len(), 1);
        assert!(matches!(&f.decls[0], Decl::Group(id, GroupDef::Cyclic { generator })
            if id.name == "Zx" && generator.name == "x"));
    }

    #[test]
    fn comments_and_blank_lines() {
        let t = load_tower("# the trefoil\n\ngroup Zx = Z(x)  # left\n").unwrap();
        assert!(t.group("Zx").is_some());
    }

    #[test]
    fn trefoil_builds() {
        let t = load_tower(TREFOIL).unwrap();
        let g = t.group("T").unwrap();
        assert!(g.as_amalgam().is_some());
        assert_eq!(t.group_ids().collect::<Vec<_>>(), ["Zx", "Zy", "T"]);
    }

    #[test]
    fn syntax_errors_are_located() {
        let e = parse_tower("group Zx = Z(x\n").unwrap_err();
        assert_eq!((e.line, e.col, e.kind), (1, 15, DiagnosticKind::Syntax));
        let e = parse_tower("group Zx = Z(x)\ngroup $ = Z(y)").unwrap_err();
        assert_eq!((e.line, e.col), (2, 7));
        let e = parse_tower("grope Zx = Z(x)").unwrap_err();
        assert_eq!((e.line, e.col), (1, 1));
    }

    #[test]
    fn use_before_declaration_is_rejected() {
        let e = load_tower("group T = amalgam(Zx, Zy, A, variant=1)").unwrap_err();
        assert_eq!(e.kind, DiagnosticKind::UnknownIdentifier);
        assert_eq!((e.line, e.col), (1, 19));
    }

    #[test]
    fn duplicates_are_rejected() {
        let e = load_tower("group Zx = Z(x)\nmap Zx = exponents(Zx: x=1)").unwrap_err();
        assert_eq!((e.kind, e.line, e.col), (DiagnosticKind::Duplicate, 2, 5));
    }

    #[test]
    fn wrong_generator_in_cyclic_subgroup() {
        let e = load_tower("group Zx = Z(x)\ngroup Zy = Z(y)\nsubgroup A = cyclic(Zx: y^2, Zy: y^3)").unwrap_err();
        assert_eq!((e.kind, e.line, e.col), (DiagnosticKind::Validation, 3, 25));
    }

    #[test]
    fn bad_variant_is_a_validation_error() {
        let text = TREFOIL.replace("variant=1", "variant=3");
        let e = load_tower(&text).unwrap_err();
        assert_eq!((e.kind, e.line), (DiagnosticKind::Validation, 4));
    }

    #[test]
    fn a_file_without_groups_is_rejected() {
        assert!(load_tower("# nothing\n").is_err());
        assert!(load_tower("").is_err());
    }

    #[test]
    fn map_with_unknown_generator() {
        let e = load_tower(&format!("{TREFOIL}map e = exponents(T: x=3, z=2)")).unwrap_err();
        assert_eq!((e.kind, e.line, e.col), (DiagnosticKind::UnknownIdentifier, 5, 27));
    }
}
