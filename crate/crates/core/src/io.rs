//! Text formats for graphs, certificates, interval systems and subtree families.
//!
//! All readers report the 1-based line of the first problem. Writers emit
//! LF line endings and a trailing newline; reading then writing a valid file
//! reproduces it byte for byte.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::comparability::{EdgePartition, Mode, Orientation};
use crate::error::{Error, Result};
use crate::generators::{GspSide, GspStructure, Interval, IntervalSystem, Rational, SubtreeFamily};
use crate::graph::{make_graph, Bipartition, Graph, Vertex};

const LABELS_HEADER: &str = "# labels";

struct Lines<'a> {
    inner: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { inner: text.lines().enumerate().peekable(), last: 0 }
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let (i, l) = self.inner.next()?;
        self.last = i + 1;
        Some((i + 1, l))
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str)> {
        self.next().ok_or_else(|| Error::parse(self.last + 1, format!("unexpected end of input, expected {what}")))
    }

    fn peek(&mut self) -> Option<&'a str> {
        self.inner.peek().map(|&(_, l)| l)
    }

    fn finish(mut self) -> Result<()> {
        match self.next() {
            Some((line, _)) => Err(Error::parse(line, "trailing content")),
            None => Ok(()),
        }
    }
}

fn numbers(line: usize, text: &str, count: usize, what: &str) -> Result<Vec<usize>> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != count {
        return Err(Error::parse(line, format!("expected {what}")));
    }
    fields
        .iter()
        .map(|f| f.parse().map_err(|_| Error::parse(line, format!("not a non-negative integer: {f:?}"))))
        .collect()
}

fn keyword(line: usize, text: &str, key: &str, count: usize, what: &str) -> Result<Vec<usize>> {
    let rest = text
        .strip_prefix(key)
        .filter(|r| r.starts_with(' '))
        .ok_or_else(|| Error::parse(line, format!("expected {what}")))?;
    numbers(line, rest, count, what)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    if let Some(labels) = g.labels() {
        out.push_str(LABELS_HEADER);
        out.push('\n');
        for l in labels {
            out.push_str(l);
            out.push('\n');
        }
    }
    out
}

fn read_graph_from(lines: &mut Lines<'_>) -> Result<Graph> {
    let (hl, header) = lines.expect("`n m`")?;
    let nm = numbers(hl, header, 2, "`n m`")?;
    let (n, m) = (nm[0], nm[1]);
    let mut pairs = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    for _ in 0..m {
        let (line, text) = lines.expect("`u v`")?;
        let uv = numbers(line, text, 2, "`u v`")?;
        let (u, v) = (uv[0], uv[1]);
        if u >= v {
            return Err(Error::parse(line, format!("edge {u} {v} must satisfy u < v")));
        }
        if v >= n {
            return Err(Error::parse(line, format!("vertex {v} out of range for {n} vertices")));
        }
        if !seen.insert((u, v)) {
            return Err(Error::parse(line, format!("duplicate edge {u} {v}")));
        }
        pairs.push((u, v));
    }
    let g = make_graph(n, &pairs)?;
    if lines.peek() != Some(LABELS_HEADER) {
        return Ok(g);
    }
    let (header_line, _) = lines.expect(LABELS_HEADER)?;
    let mut labels = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, text) = lines.expect("a vertex label")?;
        if text.is_empty() || text.trim() != text {
            return Err(Error::parse(line, "labels must be non-empty without surrounding whitespace"));
        }
        labels.push(text.to_string());
    }
    g.with_labels(labels).map_err(|e| Error::parse(header_line, e.to_string()))
}

/// Line order is edge-ID order.
pub fn read_graph(text: &str) -> Result<Graph> {
    let mut lines = Lines::new(text);
    let g = read_graph_from(&mut lines)?;
    lines.finish()?;
    Ok(g)
}

/// Every part needs a certificate.
pub fn write_certificate(ep: &EdgePartition) -> Result<String> {
    let mut out = format!("parts {} mode {}\n", ep.len(), ep.mode());
    for (i, part) in ep.parts().iter().enumerate() {
        let cert = ep.certificate(i).ok_or(Error::MissingCertificate { part: i })?;
        let _ = writeln!(out, "part {i} size {}", part.len());
        for &e in part {
            let (tail, head) = cert.get(e).ok_or(Error::MissingCertificate { part: i })?;
            let _ = writeln!(out, "{e} {tail} {head}");
        }
    }
    Ok(out)
}

pub fn read_certificate(text: &str) -> Result<EdgePartition> {
    let mut lines = Lines::new(text);
    let (hl, header) = lines.expect("`parts k mode {partition|cover}`")?;
    let fields: Vec<&str> = header.split(' ').collect();
    let [p, k, m, mode] = fields[..] else {
        return Err(Error::parse(hl, "expected `parts k mode {partition|cover}`"));
    };
    if p != "parts" || m != "mode" {
        return Err(Error::parse(hl, "expected `parts k mode {partition|cover}`"));
    }
    let k: usize = k.parse().map_err(|_| Error::parse(hl, format!("bad part count {k:?}")))?;
    let mode: Mode = mode.parse().map_err(|e: String| Error::parse(hl, e))?;
    let mut parts = Vec::with_capacity(k);
    let mut certs = Vec::with_capacity(k);
    for i in 0..k {
        let (line, text) = lines.expect("`part i size s`")?;
        let size = match text.split(' ').collect::<Vec<_>>()[..] {
            ["part", idx, "size", size] if idx == i.to_string() => size.parse::<usize>().ok(),
            _ => None,
        }
        .ok_or_else(|| Error::parse(line, format!("expected `part {i} size s`")))?;
        if size == 0 {
            return Err(Error::parse(line, "empty part"));
        }
        let mut ids = Vec::with_capacity(size);
        let mut o = Orientation::new();
        for _ in 0..size {
            let (line, text) = lines.expect("`edgeID tail head`")?;
            let x = numbers(line, text, 3, "`edgeID tail head`")?;
            if ids.last().is_some_and(|&last| last >= x[0]) {
                return Err(Error::parse(line, "edge IDs must be strictly ascending within a part"));
            }
            ids.push(x[0]);
            o.insert(x[0], x[1], x[2]);
        }
        parts.push(ids);
        certs.push(Some(o));
    }
    lines.finish()?;
    Ok(EdgePartition::with_certificates(parts, mode, certs))
}

/// Finite decimals print as decimals, everything else as `p/q`.
pub fn format_rational(x: Rational) -> String {
    let (numer, denom) = (*x.numer(), *x.denom());
    if denom == 1 {
        return numer.to_string();
    }
    let (mut d, mut twos, mut fives) = (denom, 0u32, 0u32);
    while d % 2 == 0 {
        d /= 2;
        twos += 1;
    }
    while d % 5 == 0 {
        d /= 5;
        fives += 1;
    }
    if d != 1 {
        return format!("{numer}/{denom}");
    }
    let digits = twos.max(fives);
    let scaled = i128::from(numer) * 10i128.pow(digits) / i128::from(denom);
    let sign = if scaled < 0 { "-" } else { "" };
    let a = scaled.unsigned_abs();
    let p = 10u128.pow(digits);
    format!("{sign}{}.{:0width$}", a / p, a % p, width = digits as usize)
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    if let Some((p, q)) = s.split_once('/') {
        let (p, q): (i64, i64) = (p.parse().ok()?, q.parse().ok()?);
        return (q > 0).then(|| Rational::new(p, q));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() || !int.bytes().all(|b| b.is_ascii_digit()) || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if body.contains('.') && frac.is_empty() {
        return None;
    }
    let denom = 10i64.checked_pow(frac.len() as u32)?;
    let whole: i64 = int.parse().ok()?;
    let f: i64 = if frac.is_empty() { 0 } else { frac.parse().ok()? };
    let numer = whole.checked_mul(denom)?.checked_add(f)?;
    Some(Rational::new(if neg { -numer } else { numer }, denom))
}

pub fn write_intervals(s: &IntervalSystem) -> String {
    s.intervals().iter().map(|iv| format!("{} {}\n", format_rational(iv.lo), format_rational(iv.hi))).collect()
}

/// Unit length is detected from the data.
pub fn read_intervals(text: &str) -> Result<IntervalSystem> {
    let mut intervals = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(Error::parse(i + 1, "expected `a b`"));
        };
        let parse = |x: &str| parse_rational(x).ok_or_else(|| Error::parse(i + 1, format!("not a rational: {x:?}")));
        let (lo, hi) = (parse(a)?, parse(b)?);
        if lo > hi {
            return Err(Error::parse(i + 1, "interval with a > b"));
        }
        intervals.push(Interval::new(lo, hi));
    }
    IntervalSystem::detect_unit(intervals)
}

pub fn write_subtree_family(f: &SubtreeFamily) -> String {
    let mut out = write_graph(&f.tree);
    let _ = writeln!(out, "root {}", f.root);
    for s in &f.subtrees {
        let line: Vec<String> = s.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_subtree_family(text: &str) -> Result<SubtreeFamily> {
    let mut lines = Lines::new(text);
    let tree = read_graph_from(&mut lines)?;
    let (rl, rtext) = lines.expect("`root r`")?;
    let root = keyword(rl, rtext, "root", 1, "`root r`")?[0];
    let mut subtrees = Vec::new();
    while let Some((line, text)) = lines.next() {
        let vs: Vec<Vertex> = text
            .split(' ')
            .map(|f| f.parse().map_err(|_| Error::parse(line, format!("not a vertex: {f:?}"))))
            .collect::<Result<_>>()?;
        if vs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::parse(line, "subtree vertices must be strictly ascending"));
        }
        subtrees.push(vs);
    }
    SubtreeFamily::new(tree, root, subtrees)
}

/// Labels recording a GSP structure: `d_` or `c_` for the side, then
/// `v1_<v>` for `V1` members and `k<c>_<v>` for clique `c` of `V2`.
pub fn gsp_labels(n: usize, s: &GspStructure) -> Vec<String> {
    let side = match s.side {
        GspSide::Direct => "d",
        GspSide::Complemented => "c",
    };
    let clique = s.clique_of(n);
    (0..n)
        .map(|v| match clique[v] {
            None => format!("{side}_v1_{v}"),
            Some(c) => format!("{side}_k{c}_{v}"),
        })
        .collect()
}

/// Inverse of [`gsp_labels`]; the structure is validated against `g`.
pub fn gsp_from_labels(g: &Graph) -> Result<GspStructure> {
    let labels = g.labels().ok_or_else(|| Error::InvalidStructure("graph has no GSP labels".into()))?;
    let bad = |l: &str| Error::InvalidStructure(format!("not a GSP label: {l:?}"));
    let mut side = None;
    let mut v1 = Vec::new();
    let mut cliques: Vec<Vec<Vertex>> = Vec::new();
    for (v, l) in labels.iter().enumerate() {
        let (sd, rest) = l.split_once('_').ok_or_else(|| bad(l))?;
        let sd = match sd {
            "d" => GspSide::Direct,
            "c" => GspSide::Complemented,
            _ => return Err(bad(l)),
        };
        if side.replace(sd).is_some_and(|prev| prev != sd) {
            return Err(Error::InvalidStructure("labels mix both GSP sides".into()));
        }
        let (kind, id) = rest.split_once('_').ok_or_else(|| bad(l))?;
        if id != v.to_string() {
            return Err(bad(l));
        }
        if kind == "v1" {
            v1.push(v);
        } else {
            let c: usize = kind.strip_prefix('k').and_then(|c| c.parse().ok()).ok_or_else(|| bad(l))?;
            if c >= cliques.len() {
                cliques.resize(c + 1, Vec::new());
            }
            cliques[c].push(v);
        }
    }
    let s = GspStructure { side: side.unwrap_or(GspSide::Direct), v1, cliques };
    s.validate(g)?;
    Ok(s)
}

/// Side A is every vertex labelled `a_*`, side B every vertex labelled `b_*`.
pub fn bipartition_from_labels(g: &Graph) -> Result<Bipartition> {
    let labels = g.labels().ok_or_else(|| Error::InvalidStructure("graph has no a_/b_ side labels".into()))?;
    let mut a = Vec::new();
    for (v, l) in labels.iter().enumerate() {
        if l.starts_with("a_") {
            a.push(v);
        } else if !l.starts_with("b_") {
            return Err(Error::InvalidStructure(format!("label {l:?} names no side")));
        }
    }
    let bp = Bipartition::from_sets(g.n(), &a);
    bp.validate(g)?;
    Ok(bp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{
        gen_gsp, gen_h, gen_random_bipartite, gen_random_subtree_family, gen_random_unit_intervals,
    };
    use crate::partition::partition_h;

    #[test]
    fn graph_round_trip() {
        let text = "4 3\n0 1\n0 2\n2 3\n";
        assert_eq!(write_graph(&read_graph(text).unwrap()), text);
        let h = gen_h(2, 2);
        let written = write_graph(&h);
        assert!(written.contains("# labels\nv_1_1\n"));
        assert_eq!(write_graph(&read_graph(&written).unwrap()), written);
    }

    #[test]
    fn graph_errors_name_lines() {
        assert_eq!(read_graph("3 2\n0 1\n1 1\n"), Err(Error::parse(3, "edge 1 1 must satisfy u < v")));
        assert!(matches!(read_graph("3 2\n0 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(read_graph("3 1\n0 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_graph("2 1\n0 1\nextra\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(read_graph("2 0\n# labels\na\na\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_graph("3 2\n0 1\n0 1\n"), Err(Error::Parse { line: 3, .. })));
        assert_eq!(write_graph(&read_graph("3 2\n1 2\n0 1\n").unwrap()), "3 2\n1 2\n0 1\n");
    }

    #[test]
    fn certificate_round_trip() {
        let (_, ep) = partition_h(2, 2);
        let text = write_certificate(&ep).unwrap();
        assert!(text.starts_with("parts 3 mode partition\npart 0 size "));
        assert_eq!(read_certificate(&text).unwrap(), ep);
        assert_eq!(write_certificate(&read_certificate(&text).unwrap()).unwrap(), text);
    }

    #[test]
    fn certificate_errors() {
        assert!(matches!(read_certificate("parts 1 mode both\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(read_certificate("parts 1 mode cover\npart 0 size 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(
            read_certificate("parts 1 mode cover\npart 1 size 1\n0 0 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            read_certificate("parts 1 mode cover\npart 0 size 2\n1 0 1\n0 1 2\n"),
            Err(Error::Parse { line: 4, .. })
        ));
        let uncertified = EdgePartition::new(vec![vec![0]], Mode::Partition);
        assert_eq!(write_certificate(&uncertified), Err(Error::MissingCertificate { part: 0 }));
    }

    #[test]
    fn rationals() {
        assert_eq!(format_rational(Rational::new(1, 2)), "0.5");
        assert_eq!(format_rational(Rational::new(-3, 4)), "-0.75");
        assert_eq!(format_rational(Rational::new(-1, 20)), "-0.05");
        assert_eq!(format_rational(Rational::new(7, 1)), "7");
        assert_eq!(format_rational(Rational::new(1, 3)), "1/3");
        for s in ["0.5", "-0.75", "12", "1/3", "2.125"] {
            assert_eq!(format_rational(parse_rational(s).unwrap()), s);
        }
        for s in ["", ".5", "1.", "a", "1/0", "--1"] {
            assert_eq!(parse_rational(s), None, "{s}");
        }
    }

    #[test]
    fn intervals_round_trip() {
        let u = gen_random_unit_intervals(10, 5, 3);
        let text = write_intervals(&u);
        let back = read_intervals(&text).unwrap();
        assert!(back.is_unit());
        assert_eq!(write_intervals(&back), text);
        assert!(matches!(read_intervals("0 1\n2 1\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn subtree_family_round_trip() {
        let f = gen_random_subtree_family(12, 6, 9);
        let text = write_subtree_family(&f);
        assert_eq!(write_subtree_family(&read_subtree_family(&text).unwrap()), text);
        assert!(matches!(read_subtree_family("2 1\n0 1\nroot x\n"), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn structure_labels_round_trip() {
        for side in [GspSide::Direct, GspSide::Complemented] {
            let (g, s) = gen_gsp(9, 4, side);
            let labelled = g.with_labels(gsp_labels(9, &s)).unwrap();
            assert_eq!(gsp_from_labels(&labelled).unwrap(), s);
        }
        let b = gen_random_bipartite(3, 4, 0.5, 2);
        assert_eq!(bipartition_from_labels(&b.graph).unwrap(), b.bipartition);
        assert!(bipartition_from_labels(&Graph::path(2)).is_err());
    }
}
