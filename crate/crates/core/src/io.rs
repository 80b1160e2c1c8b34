//! Plain-text formats for complexes, groups and fixed-point complexes.
//!
//! ```text
//! dim 2
//! vertices 6
//! facet 1 2 3
//! ```
//!
//! Groups are `degree n` followed by one generator per line in cycle
//! notation. Fixed-point complexes add `label v1 v2 ...` lines, one per
//! vertex in order, naming the orbit each vertex stands for. Blank lines
//! and lines starting with `#` are ignored everywhere.

use std::fmt::Write as _;
use std::path::Path;

use crate::complex::SimplicialComplex;
use crate::error::ParseError;
use crate::fixed_points::FixedPointComplex;
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::vertex_set::VertexSet;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_number<T: std::str::FromStr>(line: usize, word: &str) -> Result<T, ParseError> {
    word.parse().map_err(|_| ParseError::syntax(line, format!("expected a number, found {word:?}")))
}

fn parse_vertices(line: usize, words: &[&str]) -> Result<VertexSet, ParseError> {
    let vs = words.iter().map(|w| parse_number::<usize>(line, w)).collect::<Result<Vec<_>, _>>()?;
    let set = VertexSet::try_from_vertices(vs.iter().copied())
        .ok_or_else(|| ParseError::syntax(line, "vertex out of range 1..=64"))?;
    if set.len() != vs.len() {
        return Err(ParseError::syntax(line, "repeated vertex"));
    }
    Ok(set)
}

fn vertex_line(keyword: &str, s: VertexSet) -> String {
    let mut out = keyword.to_string();
    for v in s {
        write!(out, " {v}").unwrap();
    }
    out
}

pub fn write_complex(k: &SimplicialComplex) -> String {
    let mut out = format!("dim {}\nvertices {}\n", k.dim(), k.n());
    for f in k.facets() {
        out.push_str(&vertex_line("facet", *f));
        out.push('\n');
    }
    out
}

struct Parsed {
    dim: Option<isize>,
    n: Option<usize>,
    facets: Vec<VertexSet>,
    labels: Vec<VertexSet>,
}

fn parse_sections(text: &str, allow_labels: bool) -> Result<Parsed, ParseError> {
    let mut p = Parsed {
        dim: None,
        n: None,
        facets: Vec::new(),
        labels: Vec::new(),
    };
    for (line, l) in content_lines(text) {
        let words: Vec<&str> = l.split_whitespace().collect();
        match words[0] {
            "dim" if words.len() == 2 => p.dim = Some(parse_number(line, words[1])?),
            "vertices" if words.len() == 2 => p.n = Some(parse_number(line, words[1])?),
            "facet" => p.facets.push(parse_vertices(line, &words[1..])?),
            "label" if allow_labels => p.labels.push(parse_vertices(line, &words[1..])?),
            other => return Err(ParseError::syntax(line, format!("unexpected {other:?}"))),
        }
    }
    Ok(p)
}

fn build_complex(p: &Parsed) -> Result<SimplicialComplex, ParseError> {
    let n = p.n.ok_or_else(|| ParseError::syntax(0, "missing `vertices` line"))?;
    let k = if p.facets.is_empty() && n == 0 {
        SimplicialComplex::empty()
    } else {
        SimplicialComplex::from_facets(n, p.facets.iter().copied())?
    };
    if let Some(d) = p.dim {
        if d != k.dim() {
            return Err(ParseError::syntax(0, format!("declared dim {d}, facets give {}", k.dim())));
        }
    }
    Ok(k)
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex, ParseError> {
    build_complex(&parse_sections(text, false)?)
}

/// Reads bare `facet` lines, e.g. a seed list; other keywords are errors
/// except `dim` and `vertices`, which are ignored.
pub fn parse_facet_list(text: &str) -> Result<Vec<VertexSet>, ParseError> {
    Ok(parse_sections(text, false)?.facets)
}

pub fn write_group(g: &PermGroup) -> String {
    let mut out = format!("degree {}\n", g.degree());
    for p in g.generators() {
        out.push_str(&p.to_cycle_string());
        out.push('\n');
    }
    out
}

pub fn parse_group(text: &str) -> Result<PermGroup, ParseError> {
    let mut lines = content_lines(text);
    let (line, first) = lines.next().ok_or_else(|| ParseError::syntax(0, "empty group file"))?;
    let degree = match first.split_whitespace().collect::<Vec<_>>()[..] {
        ["degree", n] => parse_number::<usize>(line, n)?,
        _ => return Err(ParseError::syntax(line, "expected `degree <n>`")),
    };
    let mut gens = Vec::new();
    for (_, l) in lines {
        gens.push(Permutation::parse_cycles(degree, l)?);
    }
    Ok(PermGroup::generate(degree, gens)?)
}

pub fn write_fixed_point_complex(f: &FixedPointComplex) -> String {
    let mut out = write_complex(&f.complex);
    for l in &f.vertex_labels {
        out.push_str(&vertex_line("label", *l));
        out.push('\n');
    }
    out
}

pub fn parse_fixed_point_complex(text: &str) -> Result<FixedPointComplex, ParseError> {
    let p = parse_sections(text, true)?;
    let complex = build_complex(&p)?;
    if p.labels.len() != complex.n() {
        return Err(ParseError::syntax(0, format!("{} labels for {} vertices", p.labels.len(), complex.n())));
    }
    Ok(FixedPointComplex {
        complex,
        vertex_labels: p.labels,
    })
}

pub fn read_complex(path: &Path) -> Result<SimplicialComplex, ParseError> {
    parse_complex(&std::fs::read_to_string(path)?)
}

pub fn read_group(path: &Path) -> Result<PermGroup, ParseError> {
    parse_group(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cp2_9, rp2_6, sym_cp2_9};
    use crate::fixed_points::fixed_point_complex;

    #[test]
    fn complex_round_trip_is_bit_exact() {
        for k in [rp2_6(), cp2_9(), SimplicialComplex::empty()] {
            let text = write_complex(&k);
            let back = parse_complex(&text).unwrap();
            assert_eq!(back, k);
            assert_eq!(write_complex(&back), text);
        }
        assert!(write_complex(&rp2_6()).starts_with("dim 2\nvertices 6\nfacet "));
    }

    #[test]
    fn comments_and_errors() {
        let k = parse_complex("# two edges\ndim 1\nvertices 3\n\nfacet 1 2\nfacet 2 3\n").unwrap();
        assert_eq!(k.facet_count(), 2);
        assert!(matches!(parse_complex("dim 2\nvertices 2\nfacet 1 2\n"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_complex("vertices 3\nfacet 1 1 2\n"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_complex("vertices 4\nfacet 1 2 3\n"), Err(ParseError::Complex(_))));
        assert!(matches!(parse_complex("vertices 3\nface 1 2\n"), Err(ParseError::Syntax { line: 2, .. })));
    }

    #[test]
    fn group_round_trip() {
        let g = sym_cp2_9();
        let back = parse_group(&write_group(&g)).unwrap();
        assert_eq!(back.elements(), g.elements());
        let c4 = parse_group("degree 15\n(1 3 2 4)(5 7 6 8)(9 11 10 12)\n").unwrap();
        assert_eq!(c4.order(), 4);
        assert!(parse_group("(1 2)\n").is_err());
    }

    #[test]
    fn fixed_point_round_trip() {
        let k = cp2_9();
        let s = sym_cp2_9().elements().iter().find(|e| e.order() == 2).unwrap().clone();
        let f = fixed_point_complex(&k, &PermGroup::cyclic(&s)).unwrap();
        let text = write_fixed_point_complex(&f);
        assert_eq!(text.matches("label").count(), 6);
        assert_eq!(parse_fixed_point_complex(&text).unwrap(), f);
    }
}
