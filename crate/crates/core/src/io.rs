//! Polygon text and JSON formats.
//!
//! Text: one `x y` pair per line, `#` starts a comment, blank lines ignored.
//! JSON: `{"vertices": [[x, y], ...]}`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::{Point, Polygon};

#[derive(Serialize, Deserialize)]
struct PolygonJson {
    vertices: Vec<[f64; 2]>,
}

/// Parses a polygon in either format; JSON is recognized by a leading `{`.
pub fn parse_polygon(s: &str) -> Result<Polygon> {
    if s.trim_start().starts_with('{') {
        parse_polygon_json(s)
    } else {
        parse_polygon_text(s)
    }
}

pub fn parse_polygon_json(s: &str) -> Result<Polygon> {
    let j: PolygonJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    Polygon::new(j.vertices.iter().map(|&[x, y]| Point::new(x, y)).collect())
}

pub fn parse_polygon_text(s: &str) -> Result<Polygon> {
    let mut pts = Vec::new();
    for (ln, raw) in s.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums: Vec<&str> = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        if nums.len() != 2 {
            return Err(Error::Parse(format!(
                "line {}: expected `x y`, got {:?}",
                ln + 1,
                raw
            )));
        }
        let num = |t: &str| {
            t.parse::<f64>()
                .map_err(|e| Error::Parse(format!("line {}: {}", ln + 1, e)))
        };
        pts.push(Point::new(num(nums[0])?, num(nums[1])?));
    }
    Polygon::new(pts)
}

pub fn polygon_to_json(p: &Polygon) -> String {
    let j = PolygonJson {
        vertices: p.vertices().iter().map(|v| [v.x, v.y]).collect(),
    };
    serde_json::to_string(&j).expect("finite coordinates serialize")
}

pub fn polygon_to_text(p: &Polygon) -> String {
    let mut s = String::new();
    for v in p.vertices() {
        writeln!(s, "{} {}", v.x, v.y).unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_formats() {
        let t = "# unit square\n0 0\n1 0   # corner\n\n1 1\n0 1\n";
        let a = parse_polygon(t).unwrap();
        let b = parse_polygon(r#"{"vertices": [[0,0],[1,0],[1,1],[0,1]]}"#).unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_polygon(&polygon_to_json(&a)).unwrap(), a);
        assert_eq!(parse_polygon(&polygon_to_text(&a)).unwrap(), a);
    }

    #[test]
    fn bad_input() {
        assert!(matches!(parse_polygon("0 0\n1\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_polygon("0 0\n1 x\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_polygon("{\"vertices\": 3}"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_polygon("0 0\n1 1\n"),
            Err(Error::TooFewVertices(2))
        ));
    }
}
