//! The line-oriented text format for algebras, maps, and diagrams, with
//! loaders that resolve nested file references.

use std::fmt;
use std::path::{Path, PathBuf};

use csr_core::{
    BaseSemiring, Diagram, DiagramArrow, FiniteSemiring, Homomorphism, SAlgebra,
};

/// A failure to turn a file into a validated value.
#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}:{line}:{column}: {detail}")]
    Syntax {
        path: String,
        line: usize,
        column: usize,
        detail: String,
    },
    #[error("{path}: {detail}")]
    Invalid { path: String, detail: String },
}

struct Syntax {
    line: usize,
    column: usize,
    detail: String,
}

impl Syntax {
    fn at(line: usize, column: usize, detail: impl Into<String>) -> Syntax {
        Syntax {
            line,
            column,
            detail: detail.into(),
        }
    }

    fn into_file_error(self, path: &Path) -> FileError {
        FileError::Syntax {
            path: path.display().to_string(),
            line: self.line,
            column: self.column,
            detail: self.detail,
        }
    }
}

fn invalid(path: &Path, detail: impl Into<String>) -> FileError {
    FileError::Invalid {
        path: path.display().to_string(),
        detail: detail.into(),
    }
}

/// One meaningful line: its 1-based number and its tokens with 1-based
/// character columns. Comments start at `#`; blank lines are dropped.
struct Line {
    number: usize,
    tokens: Vec<(usize, String)>,
}

impl Line {
    fn token(&self, i: usize) -> Option<&(usize, String)> {
        self.tokens.get(i)
    }

    fn end_column(&self) -> usize {
        self.tokens
            .last()
            .map(|(c, t)| c + t.chars().count())
            .unwrap_or(1)
    }

    /// The line must hold exactly `n` tokens.
    fn exactly(&self, n: usize, what: &str) -> Result<(), Syntax> {
        if self.tokens.len() < n {
            return Err(Syntax::at(
                self.number,
                self.end_column(),
                format!("expected {what}"),
            ));
        }
        if let Some((col, tok)) = self.token(n) {
            return Err(Syntax::at(
                self.number,
                *col,
                format!("unexpected `{tok}` after {what}"),
            ));
        }
        Ok(())
    }

    fn usize_at(&self, i: usize, what: &str) -> Result<usize, Syntax> {
        let (col, tok) = self.token(i).ok_or_else(|| {
            Syntax::at(self.number, self.end_column(), format!("expected {what}"))
        })?;
        tok.parse().map_err(|_| {
            Syntax::at(
                self.number,
                *col,
                format!("expected {what}, found `{tok}`"),
            )
        })
    }
}

fn scan(text: &str) -> Vec<Line> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut column = 0usize;
        let mut current = String::new();
        let mut start = 0usize;
        for ch in body.chars() {
            column += 1;
            if ch.is_whitespace() {
                if !current.is_empty() {
                    tokens.push((start, std::mem::take(&mut current)));
                }
            } else {
                if current.is_empty() {
                    start = column;
                }
                current.push(ch);
            }
        }
        if !current.is_empty() {
            tokens.push((start, current));
        }
        if !tokens.is_empty() {
            out.push(Line {
                number: idx + 1,
                tokens,
            });
        }
    }
    out
}

struct Cursor {
    lines: Vec<Line>,
    pos: usize,
    eof_line: usize,
}

impl Cursor {
    fn new(text: &str) -> Cursor {
        let lines = scan(text);
        let eof_line = text.lines().count() + 1;
        Cursor {
            lines,
            pos: 0,
            eof_line,
        }
    }

    fn peek(&self) -> Option<&Line> {
        self.lines.get(self.pos)
    }

    fn next(&mut self, what: &str) -> Result<&Line, Syntax> {
        let line = self.lines.get(self.pos).ok_or_else(|| {
            Syntax::at(self.eof_line, 1, format!("expected {what}, found end of file"))
        })?;
        self.pos += 1;
        Ok(line)
    }

    fn done(&self) -> Result<(), Syntax> {
        match self.peek() {
            None => Ok(()),
            Some(line) => {
                let (col, tok) = &line.tokens[0];
                Err(Syntax::at(
                    line.number,
                    *col,
                    format!("unexpected `{tok}` after the end of the block"),
                ))
            }
        }
    }
}

/// The keyword line `KEY NAME`; returns the name token.
fn keyword_line(cur: &mut Cursor, key: &str) -> Result<String, Syntax> {
    let line = cur.next(&format!("`{key} NAME`"))?;
    let (col, tok) = &line.tokens[0];
    if tok != key {
        return Err(Syntax::at(
            line.number,
            *col,
            format!("expected `{key}`, found `{tok}`"),
        ));
    }
    line.exactly(2, &format!("`{key} NAME`"))?;
    Ok(line.tokens[1].1.clone())
}

fn table_rows(cur: &mut Cursor, key: &str, order: usize) -> Result<Vec<Vec<usize>>, Syntax> {
    let line = cur.next(&format!("`{key}`"))?;
    let (col, tok) = &line.tokens[0];
    if tok != key {
        return Err(Syntax::at(
            line.number,
            *col,
            format!("expected `{key}`, found `{tok}`"),
        ));
    }
    line.exactly(1, &format!("`{key}`"))?;
    let mut rows = Vec::with_capacity(order);
    for _ in 0..order {
        let line = cur.next(&format!("a row of {order} entries"))?;
        line.exactly(order, &format!("a row of {order} entries"))?;
        let mut row = Vec::with_capacity(order);
        for i in 0..order {
            row.push(line.usize_at(i, "a table entry")?);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Parses one `semiring` block from the cursor.
fn parse_semiring(cur: &mut Cursor) -> Result<Result<FiniteSemiring, String>, Syntax> {
    let name = keyword_line(cur, "semiring")?;
    let order_line = cur.next("`order N`")?;
    let (col, tok) = &order_line.tokens[0];
    if tok != "order" {
        return Err(Syntax::at(
            order_line.number,
            *col,
            format!("expected `order`, found `{tok}`"),
        ));
    }
    order_line.exactly(2, "`order N`")?;
    let order = order_line.usize_at(1, "the order")?;
    if order == 0 {
        let (col, _) = order_line.tokens[1];
        return Err(Syntax::at(order_line.number, col, "the order must be at least 1"));
    }
    let add = table_rows(cur, "add", order)?;
    let mul = table_rows(cur, "mul", order)?;
    Ok(FiniteSemiring::from_rows(Some(&name), order, add, mul)
        .map_err(|report| report.to_string()))
}

/// The body of a map block: `hom SRC -> DST` plus one `i -> j` line per
/// source element, in any order but with full coverage.
struct RawMap {
    src: String,
    dst: String,
    pairs: Vec<(usize, usize)>,
}

fn parse_map_block(cur: &mut Cursor) -> Result<RawMap, Syntax> {
    let line = cur.next("`hom SRC -> DST`")?;
    let (col, tok) = &line.tokens[0];
    if tok != "hom" {
        return Err(Syntax::at(
            line.number,
            *col,
            format!("expected `hom`, found `{tok}`"),
        ));
    }
    line.exactly(4, "`hom SRC -> DST`")?;
    let (arrow_col, arrow) = &line.tokens[2];
    if arrow != "->" {
        return Err(Syntax::at(
            line.number,
            *arrow_col,
            format!("expected `->`, found `{arrow}`"),
        ));
    }
    let src = line.tokens[1].1.clone();
    let dst = line.tokens[3].1.clone();
    let mut pairs = Vec::new();
    while cur.peek().is_some() {
        let line = cur.next("`i -> j`")?;
        line.exactly(3, "`i -> j`")?;
        let i = line.usize_at(0, "a source index")?;
        let (arrow_col, arrow) = &line.tokens[1];
        if arrow != "->" {
            return Err(Syntax::at(
                line.number,
                *arrow_col,
                format!("expected `->`, found `{arrow}`"),
            ));
        }
        let j = line.usize_at(2, "a target index")?;
        pairs.push((i, j));
    }
    Ok(RawMap { src, dst, pairs })
}

fn assemble_map(
    path: &Path,
    raw: RawMap,
    src: &FiniteSemiring,
    dst: &FiniteSemiring,
) -> Result<Homomorphism, FileError> {
    if raw.src != src.label() {
        return Err(invalid(
            path,
            format!("the map is from `{}`, not `{}`", raw.src, src.label()),
        ));
    }
    if raw.dst != dst.label() {
        return Err(invalid(
            path,
            format!("the map is into `{}`, not `{}`", raw.dst, dst.label()),
        ));
    }
    let mut images: Vec<Option<usize>> = vec![None; src.order()];
    for (i, j) in raw.pairs {
        if i >= src.order() {
            return Err(invalid(
                path,
                format!("source index {i} outside a carrier of order {}", src.order()),
            ));
        }
        if images[i].replace(j).is_some() {
            return Err(invalid(path, format!("source index {i} is mapped twice")));
        }
    }
    let map: Vec<usize> = images
        .iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| invalid(path, format!("source index {i} has no image"))))
        .collect::<Result<_, _>>()?;
    Homomorphism::validate(src, dst, map).map_err(|e| invalid(path, e.to_string()))
}

fn read(path: &Path) -> Result<String, FileError> {
    std::fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// A parsed algebra file: either a bare semiring or an algebra over an
/// explicit base.
#[derive(Clone, Debug)]
pub enum LoadedAlgebra {
    Plain(FiniteSemiring),
    Over(SAlgebra),
}

impl LoadedAlgebra {
    /// Bare semirings become algebras over the naturals.
    pub fn into_salgebra(self) -> SAlgebra {
        match self {
            LoadedAlgebra::Plain(a) => SAlgebra::over_naturals(a),
            LoadedAlgebra::Over(a) => a,
        }
    }

    pub fn algebra(&self) -> &FiniteSemiring {
        match self {
            LoadedAlgebra::Plain(a) => a,
            LoadedAlgebra::Over(a) => a.algebra(),
        }
    }
}

/// Loads an algebra file, auto-detecting the bare and based layouts by
/// their first keyword.
pub fn load_algebra(path: &Path) -> Result<LoadedAlgebra, FileError> {
    let text = read(path)?;
    let mut cur = Cursor::new(&text);
    let first = cur
        .peek()
        .map(|l| l.tokens[0].1.clone())
        .unwrap_or_default();
    match first.as_str() {
        "base" => {
            let base = {
                let line = cur.next("`base FILE`").map_err(|e| e.into_file_error(path))?;
                line.exactly(2, "`base FILE`")
                    .map_err(|e| e.into_file_error(path))?;
                let arg = line.tokens[1].1.clone();
                if arg == "naturals" {
                    BaseSemiring::Naturals
                } else {
                    let loaded = load_algebra(&sibling(path, &arg))?;
                    BaseSemiring::Finite(loaded.algebra().clone())
                }
            };
            let algebra = parse_semiring(&mut cur)
                .map_err(|e| e.into_file_error(path))?
                .map_err(|detail| invalid(path, detail))?;
            let structure = if cur.peek().is_some() {
                let raw = parse_map_block(&mut cur).map_err(|e| e.into_file_error(path))?;
                cur.done().map_err(|e| e.into_file_error(path))?;
                let src = match &base {
                    BaseSemiring::Finite(s) => s,
                    BaseSemiring::Naturals => {
                        return Err(invalid(
                            path,
                            "a structure map block needs a finite base",
                        ))
                    }
                };
                Some(assemble_map(path, raw, src, &algebra)?)
            } else {
                None
            };
            let salgebra = SAlgebra::new(base, algebra, structure)
                .map_err(|e| invalid(path, e.to_string()))?;
            Ok(LoadedAlgebra::Over(salgebra))
        }
        "semiring" => {
            let algebra = parse_semiring(&mut cur)
                .map_err(|e| e.into_file_error(path))?
                .map_err(|detail| invalid(path, detail))?;
            cur.done().map_err(|e| e.into_file_error(path))?;
            Ok(LoadedAlgebra::Plain(algebra))
        }
        _ => {
            let (line, column) = cur
                .peek()
                .map(|l| (l.number, l.tokens[0].0))
                .unwrap_or((1, 1));
            Err(FileError::Syntax {
                path: path.display().to_string(),
                line,
                column,
                detail: format!("expected `semiring` or `base`, found `{first}`"),
            })
        }
    }
}

/// Loads a map file against its declared endpoints.
pub fn load_map(
    path: &Path,
    src: &FiniteSemiring,
    dst: &FiniteSemiring,
) -> Result<Homomorphism, FileError> {
    let text = read(path)?;
    let mut cur = Cursor::new(&text);
    let raw = parse_map_block(&mut cur).map_err(|e| e.into_file_error(path))?;
    cur.done().map_err(|e| e.into_file_error(path))?;
    assemble_map(path, raw, src, dst)
}

/// Loads a diagram file: `object FILE` lines plus `arrow i j MAPFILE`
/// lines, with paths resolved relative to the diagram file.
pub fn load_diagram(path: &Path) -> Result<Diagram, FileError> {
    let text = read(path)?;
    let cur = Cursor::new(&text);
    let mut objects: Vec<SAlgebra> = Vec::new();
    let mut arrows: Vec<(usize, usize, PathBuf)> = Vec::new();
    for line in &cur.lines {
        let (col, tok) = &line.tokens[0];
        match tok.as_str() {
            "object" => {
                line.exactly(2, "`object FILE`")
                    .map_err(|e| e.into_file_error(path))?;
                let obj = load_algebra(&sibling(path, &line.tokens[1].1))?;
                objects.push(obj.into_salgebra());
            }
            "arrow" => {
                line.exactly(4, "`arrow SRC DST MAPFILE`")
                    .map_err(|e| e.into_file_error(path))?;
                let src = line
                    .usize_at(1, "a source object index")
                    .map_err(|e| e.into_file_error(path))?;
                let dst = line
                    .usize_at(2, "a target object index")
                    .map_err(|e| e.into_file_error(path))?;
                arrows.push((src, dst, sibling(path, &line.tokens[3].1)));
            }
            _ => {
                return Err(FileError::Syntax {
                    path: path.display().to_string(),
                    line: line.number,
                    column: *col,
                    detail: format!("expected `object` or `arrow`, found `{tok}`"),
                })
            }
        }
    }
    let mut resolved = Vec::new();
    for (src, dst, map_path) in arrows {
        if src >= objects.len() || dst >= objects.len() {
            return Err(invalid(
                path,
                format!("arrow {src} {dst} points outside the {} objects", objects.len()),
            ));
        }
        let map = load_map(
            &map_path,
            objects[src].algebra(),
            objects[dst].algebra(),
        )?;
        resolved.push(DiagramArrow { src, dst, map });
    }
    Diagram::new(objects, resolved).map_err(|e| invalid(path, e.to_string()))
}

fn sibling(anchor: &Path, name: &str) -> PathBuf {
    match anchor.parent() {
        Some(dir) if !dir.as_os_str().is_empty() => dir.join(name),
        _ => PathBuf::from(name),
    }
}

/// Renders a homomorphism in the map-file format.
pub fn render_map(h: &Homomorphism) -> String {
    let mut out = format!("hom {} -> {}\n", h.source().label(), h.target().label());
    for (i, j) in h.map().iter().enumerate() {
        out.push_str(&format!("{i} -> {j}\n"));
    }
    out
}

/// Renders an algebra together with its base and structure map, in the
/// based file layout.
pub fn render_salgebra(a: &SAlgebra) -> String {
    let mut out = match a.base() {
        BaseSemiring::Naturals => String::new(),
        BaseSemiring::Finite(_) => format!("base {}\n", a.base().label()),
    };
    out.push_str(&a.algebra().to_string());
    if let Some(f) = a.structure() {
        out.push_str(&render_map(f));
    }
    out
}

/// Wraps a value's standard rendering for CLI printing.
pub fn render_algebra(a: &FiniteSemiring) -> String {
    a.to_string()
}

impl fmt::Display for LoadedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadedAlgebra::Plain(a) => write!(f, "{a}"),
            LoadedAlgebra::Over(a) => write!(f, "{}", render_salgebra(a)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use csr_core::builtins;
    use std::io::Write;

    fn tmp(name: &str, text: &str) -> PathBuf {
        let dir = std::env::temp_dir().join("csr-format-tests");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join(name);
        let mut f = std::fs::File::create(&path).unwrap();
        f.write_all(text.as_bytes()).unwrap();
        path
    }

    #[test]
    fn algebra_files_round_trip_through_display() {
        for s in builtins::all() {
            let path = tmp(&format!("rt-{}.alg", s.label()), &s.to_string());
            let loaded = load_algebra(&path).unwrap();
            assert!(loaded.algebra().same_tables(&s));
            assert_eq!(loaded.algebra().label(), s.label());
        }
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# a comment\nsemiring Z2 # trailing\n\norder 2\nadd\n0 1\n1 0\nmul\n0 0\n0 1\n";
        let path = tmp("commented.alg", text);
        let loaded = load_algebra(&path).unwrap();
        assert!(loaded.algebra().same_tables(&builtins::z2()));
    }

    #[test]
    fn syntax_errors_carry_line_and_column() {
        let text = "semiring X\norder 2\nadd\n0 1\n1 x\nmul\n0 0\n0 1\n";
        let path = tmp("bad-token.alg", text);
        match load_algebra(&path) {
            Err(FileError::Syntax { line, column, .. }) => {
                assert_eq!((line, column), (5, 3));
            }
            other => panic!("expected a syntax error, got {other:?}"),
        }
    }

    #[test]
    fn short_rows_are_syntax_errors() {
        let text = "semiring X\norder 2\nadd\n0 1\n1\nmul\n0 0\n0 1\n";
        let path = tmp("short-row.alg", text);
        match load_algebra(&path) {
            Err(FileError::Syntax { line, .. }) => assert_eq!(line, 5),
            other => panic!("expected a syntax error, got {other:?}"),
        }
    }

    #[test]
    fn axiom_failures_are_invalid_not_syntax() {
        let text = "semiring X\norder 2\nadd\n0 1\n1 0\nmul\n0 1\n0 1\n";
        let path = tmp("bad-axiom.alg", text);
        match load_algebra(&path) {
            Err(FileError::Invalid { detail, .. }) => {
                assert!(detail.contains("absorption"), "unexpected detail: {detail}");
            }
            other => panic!("expected a validation error, got {other:?}"),
        }
    }

    #[test]
    fn map_files_validate_against_endpoints() {
        let z2 = builtins::z2();
        let path = tmp("id.map", "hom Z2 -> Z2\n0 -> 0\n1 -> 1\n");
        let h = load_map(&path, &z2, &z2).unwrap();
        assert_eq!(h.map(), &[0, 1]);

        let swapped = tmp("swap.map", "hom Z2 -> Z2\n0 -> 1\n1 -> 0\n");
        assert!(matches!(
            load_map(&swapped, &z2, &z2),
            Err(FileError::Invalid { .. })
        ));

        let misnamed = tmp("misnamed.map", "hom B -> Z2\n0 -> 0\n1 -> 1\n");
        assert!(matches!(
            load_map(&misnamed, &z2, &z2),
            Err(FileError::Invalid { .. })
        ));
    }

    #[test]
    fn based_files_embed_a_structure_map() {
        let base = tmp("base-z2.alg", &builtins::z2().to_string());
        let text = format!(
            "base {}\nsemiring D4\norder 4\nadd\n{}mul\n{}hom Z2 -> D4\n0 -> 0\n1 -> 1\n",
            base.display(),
            "0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n",
            "0 0 0 0\n0 1 2 3\n0 2 0 2\n0 3 2 1\n",
        );
        let path = tmp("d4-over-z2.alg", &text);
        let loaded = load_algebra(&path).unwrap();
        match loaded {
            LoadedAlgebra::Over(a) => {
                assert_eq!(a.base().label(), "Z2");
                assert_eq!(a.structure().unwrap().map(), &[0, 1]);
            }
            other => panic!("expected a based algebra, got {other:?}"),
        }
    }

    #[test]
    fn rendered_based_algebras_name_their_base() {
        let base = tmp("rr-base.alg", &builtins::z2().to_string());
        let text = format!(
            "base {}\nsemiring D4\norder 4\nadd\n{}mul\n{}hom Z2 -> D4\n0 -> 0\n1 -> 1\n",
            base.display(),
            "0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n",
            "0 0 0 0\n0 1 2 3\n0 2 0 2\n0 3 2 1\n",
        );
        let path = tmp("rr-d4.alg", &text);
        let loaded = load_algebra(&path).unwrap().into_salgebra();
        let rendered = render_salgebra(&loaded);
        assert!(rendered.starts_with("base Z2\n"));
        assert!(rendered.contains("hom Z2 -> D4"));
    }

    #[test]
    fn diagrams_resolve_objects_and_arrows() {
        let dir = std::env::temp_dir().join("csr-format-tests");
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(dir.join("dg-z2.alg"), builtins::z2().to_string()).unwrap();
        std::fs::write(dir.join("dg-id.map"), "hom Z2 -> Z2\n0 -> 0\n1 -> 1\n").unwrap();
        std::fs::write(
            dir.join("dg.diag"),
            "object dg-z2.alg\nobject dg-z2.alg\narrow 0 1 dg-id.map\n",
        )
        .unwrap();
        let d = load_diagram(&dir.join("dg.diag")).unwrap();
        assert_eq!(d.objects().len(), 2);
        assert_eq!(d.arrows().len(), 1);
    }

    #[test]
    fn empty_diagram_files_are_invalid() {
        let path = tmp("empty.diag", "# nothing here\n");
        match load_diagram(&path) {
            Err(FileError::Invalid { detail, .. }) => {
                assert!(detail.contains("at least one object"));
            }
            other => panic!("expected an invalid-diagram error, got {other:?}"),
        }
    }
}
