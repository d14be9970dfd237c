//! The GUC v1 text format: a host graph plus the family it claims to cycle.
//!
//! ```text
//! guc 1
//! family subsets
//! params n=6 k=2
//! N 15
//! w 6
//! e 1 2 1
//! ...
//! end
//! ```
//!
//! Line-oriented UTF-8 with LF endings; edge lines are `e <a> <b> <mult>`
//! with a < b, sorted by (a, b). Serialization is deterministic and
//! `parse(serialize(host, params)) == (host, params)`.

use crate::error::{Error, Result};
use crate::families::{Family, FamilyParams};
use crate::graph::{cyclic_distance, HostGraph};

/// Renders a host and its family descriptor in GUC v1 form.
pub fn serialize(host: &HostGraph, params: &FamilyParams) -> String {
    let mut out = String::new();
    out.push_str("guc 1\n");
    out.push_str(&format!("family {}\n", params.family));
    match params.k {
        Some(k) => out.push_str(&format!("params n={} k={k}\n", params.n)),
        None => out.push_str(&format!("params n={}\n", params.n)),
    }
    out.push_str(&format!("N {}\n", host.size()));
    out.push_str(&format!("w {}\n", host.window_size()));
    for ((a, b), mult) in host.edges() {
        out.push_str(&format!("e {a} {b} {mult}\n"));
    }
    out.push_str("end\n");
    out
}

struct Lines<'a> {
    iter: std::str::Lines<'a>,
    number: usize,
}

impl<'a> Lines<'a> {
    fn next(&mut self) -> Result<&'a str> {
        self.number += 1;
        self.iter.next().ok_or(Error::Parse {
            line: self.number,
            message: "unexpected end of input".into(),
        })
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.number,
            message: message.into(),
        }
    }
}

fn parse_int(lines: &Lines<'_>, token: &str, what: &str) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| lines.error(format!("{what} is not a valid integer: {token:?}")))
}

/// Inverse of [`serialize`]. Every structural defect (malformed header,
/// out-of-range endpoint, duplicate edge, edge invisible to all windows) is
/// reported with its line number. Family parameter ranges are not checked
/// here; verification validates them.
pub fn parse(text: &str) -> Result<(HostGraph, FamilyParams)> {
    let mut lines = Lines {
        iter: text.lines(),
        number: 0,
    };

    let header = lines.next()?;
    if header != "guc 1" {
        return Err(lines.error(format!("expected header \"guc 1\", found {header:?}")));
    }

    let family_line = lines.next()?;
    let family_name = family_line
        .strip_prefix("family ")
        .ok_or_else(|| lines.error("expected \"family <name>\""))?;
    let family = Family::from_name(family_name)
        .ok_or_else(|| lines.error(format!("unknown family {family_name:?}")))?;

    let params_line = lines.next()?;
    let params_body = params_line
        .strip_prefix("params ")
        .ok_or_else(|| lines.error("expected \"params <key=value ...>\""))?;
    let mut n = None;
    let mut k = None;
    for pair in params_body.split_whitespace() {
        let (key, value) = pair
            .split_once('=')
            .ok_or_else(|| lines.error(format!("malformed parameter {pair:?}")))?;
        let value = parse_int(&lines, value, key)?;
        match key {
            "n" if n.is_none() => n = Some(value),
            "k" if k.is_none() => k = Some(value),
            "n" | "k" => return Err(lines.error(format!("parameter {key} given twice"))),
            _ => return Err(lines.error(format!("unknown parameter {key:?}"))),
        }
    }
    let n = n.ok_or_else(|| lines.error("missing parameter n"))?;
    let params = FamilyParams::new(family, n, k)
        .map_err(|e| lines.error(e.to_string()))?;

    let size_line = lines.next()?;
    let size_token = size_line
        .strip_prefix("N ")
        .ok_or_else(|| lines.error("expected \"N <int>\""))?;
    let size = parse_int(&lines, size_token, "N")?;

    let window_line = lines.next()?;
    let window_token = window_line
        .strip_prefix("w ")
        .ok_or_else(|| lines.error("expected \"w <int>\""))?;
    let window = parse_int(&lines, window_token, "w")?;
    if window != params.n {
        return Err(lines.error(format!(
            "window size {window} does not match family parameter n={}",
            params.n
        )));
    }
    if window < 2 || window > size {
        return Err(lines.error(format!("window size {window} outside 2..={size}")));
    }

    let simple = !family.is_multigraph();
    let mut edges = Vec::new();
    loop {
        let line = lines.next()?;
        if line == "end" {
            break;
        }
        let rest = line
            .strip_prefix("e ")
            .ok_or_else(|| lines.error(format!("expected edge line or \"end\", found {line:?}")))?;
        let tokens: Vec<&str> = rest.split_whitespace().collect();
        if tokens.len() != 3 {
            return Err(lines.error("edge line must be \"e <a> <b> <mult>\""));
        }
        let a = parse_int(&lines, tokens[0], "edge endpoint")?;
        let b = parse_int(&lines, tokens[1], "edge endpoint")?;
        let mult = parse_int(&lines, tokens[2], "edge multiplicity")?;
        if a >= b {
            return Err(lines.error(format!("edge endpoints must satisfy a < b, found {a} {b}")));
        }
        if a < 1 || b > size {
            return Err(lines.error(format!("edge ({a},{b}) has an endpoint outside 1..={size}")));
        }
        if mult == 0 {
            return Err(lines.error("edge multiplicity must be positive"));
        }
        if simple && mult > 1 {
            return Err(lines.error(format!(
                "multiplicity {mult} not allowed: family {family} hosts are simple"
            )));
        }
        let distance = cyclic_distance(a, b, size);
        if distance >= window {
            return Err(lines.error(format!(
                "edge ({a},{b}) at cyclic distance {distance} is invisible to every \
                 window of size {window}"
            )));
        }
        if edges.iter().any(|&((x, y), _)| (x, y) == (a, b)) {
            return Err(lines.error(format!("edge ({a},{b}) listed twice")));
        }
        edges.push(((a, b), mult));
    }
    if lines.iter.next().is_some() {
        return Err(Error::Parse {
            line: lines.number + 1,
            message: "unexpected content after \"end\"".into(),
        });
    }

    let host = HostGraph::new(size, window, edges, simple)?;
    Ok((host, params))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h3() -> HostGraph {
        HostGraph::new(
            6,
            3,
            [(1, 2), (1, 3), (2, 3), (2, 4), (3, 5), (4, 5)]
                .into_iter()
                .map(|pair| (pair, 1)),
            true,
        )
        .unwrap()
    }

    fn h3_params() -> FamilyParams {
        FamilyParams::new(Family::Permutations, 3, None).unwrap()
    }

    #[test]
    fn minimal_host_serializes_to_one_edge_line() {
        let host = HostGraph::new(3, 2, [((1, 2), 1)], true).unwrap();
        let params = FamilyParams::new(Family::Subsets, 2, Some(1)).unwrap();
        let text = serialize(&host, &params);
        assert_eq!(
            text,
            "guc 1\nfamily subsets\nparams n=2 k=1\nN 3\nw 2\ne 1 2 1\nend\n"
        );
    }

    #[test]
    fn h3_serializes_with_six_edge_lines() {
        let text = serialize(&h3(), &h3_params());
        assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 6);
    }

    #[test]
    fn multigraph_edge_keeps_its_multiplicity() {
        let host = HostGraph::new(3, 2, [((1, 2), 2)], false).unwrap();
        let params = FamilyParams::new(Family::Multisets, 2, Some(2)).unwrap();
        let text = serialize(&host, &params);
        assert!(text.contains("e 1 2 2\n"));
    }

    #[test]
    fn round_trip_is_identity() {
        let (host, params) = parse(&serialize(&h3(), &h3_params())).unwrap();
        assert_eq!(host, h3());
        assert_eq!(params, h3_params());
    }

    #[test]
    fn invisible_edge_is_rejected_with_line_number() {
        let text = "guc 1\nfamily permutations\nparams n=3\nN 6\nw 3\ne 1 4 1\nend\n";
        match parse(text) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 6);
                assert!(message.contains("cyclic distance 3"), "{message}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn truncated_file_reports_unexpected_end() {
        let text = "guc 1\nfamily permutations\nparams n=3\nN 6\nw 3\ne 1 2 1\n";
        match parse(text) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 7);
                assert_eq!(message, "unexpected end of input");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_edge_is_rejected() {
        let text = "guc 1\nfamily permutations\nparams n=3\nN 6\nw 3\ne 1 2 1\ne 1 2 1\nend\n";
        match parse(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 7),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn out_of_range_endpoint_is_rejected() {
        let text = "guc 1\nfamily permutations\nparams n=3\nN 6\nw 3\ne 1 7 1\nend\n";
        assert!(matches!(parse(text), Err(Error::Parse { line: 6, .. })));
    }

    #[test]
    fn window_size_must_match_family_n() {
        let text = "guc 1\nfamily permutations\nparams n=4\nN 6\nw 3\nend\n";
        assert!(matches!(parse(text), Err(Error::Parse { line: 5, .. })));
    }

    #[test]
    fn bad_header_is_rejected() {
        assert!(matches!(parse("guc 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse(""), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn trailing_content_is_rejected() {
        let text = "guc 1\nfamily permutations\nparams n=3\nN 6\nw 3\nend\nextra\n";
        assert!(matches!(parse(text), Err(Error::Parse { line: 7, .. })));
    }
}
