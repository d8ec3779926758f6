use super::cell::Cell;
use super::cellset::CellSet;

/// Run-length clues for each row and column of a cell set's bounding box,
/// rows and columns in ascending index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonogramClues {
    pub rows: Vec<Vec<usize>>,
    pub cols: Vec<Vec<usize>>,
}

fn runs(occupied: impl Iterator<Item = bool>) -> Vec<usize> {
    let mut out = Vec::new();
    let mut cur = 0;
    for o in occupied {
        if o {
            cur += 1;
        } else if cur > 0 {
            out.push(cur);
            cur = 0;
        }
    }
    if cur > 0 {
        out.push(cur);
    }
    out
}

pub fn nonogram_clues(s: &CellSet) -> NonogramClues {
    let Some(b) = s.bounds() else {
        return NonogramClues {
            rows: vec![],
            cols: vec![],
        };
    };
    let rows = (b.min.row..=b.max.row)
        .map(|r| runs((b.min.col..=b.max.col).map(|c| s.contains(Cell::new(c, r)))))
        .collect();
    let cols = (b.min.col..=b.max.col)
        .map(|c| runs((b.min.row..=b.max.row).map(|r| s.contains(Cell::new(c, r)))))
        .collect();
    NonogramClues { rows, cols }
}

impl NonogramClues {
    /// Text export: a `rows` section then a `columns` section, one clue list per
    /// line; an empty line is written as `0`.
    pub fn to_text(&self) -> String {
        let line = |v: &Vec<usize>| {
            if v.is_empty() {
                "0".to_string()
            } else {
                v.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(" ")
            }
        };
        let mut s = String::from("rows\n");
        for r in &self.rows {
            s.push_str(&line(r));
            s.push('\n');
        }
        s.push_str("columns\n");
        for c in &self.cols {
            s.push_str(&line(c));
            s.push('\n');
        }
        s
    }
}
