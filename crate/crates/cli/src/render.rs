//! Text rendering of a Ferrers diagram with its ascending diagonals.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use ferrers_core::shape::Partition;

/// Diagrams wider or taller than this are refused rather than wrapped.
pub const MAX_RENDER_DIM: u32 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("RenderTooLarge: diagram is {rows}x{cols}, the rendering cap is {MAX_RENDER_DIM}x{MAX_RENDER_DIM}")]
pub struct RenderTooLarge {
    pub rows: u32,
    pub cols: u32,
}

/// JSON form of a rendered diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MachineDiagram {
    pub lambda: Vec<u32>,
    pub rows: Vec<String>,
    pub mu: u64,
}

/// Draws the diagram: one line per row, each cell showing the 1-based index
/// `r + s − 1` of its ascending diagonal (mod 10 to stay one column wide),
/// then a legend line with `μ`.
pub fn render_diagram(p: &Partition) -> Result<String, RenderTooLarge> {
    let rows = diagram_rows(p)?;
    let mut out = String::new();
    for row in rows {
        out.push_str(&row);
        out.push('\n');
    }
    out.push_str(&format!("μ = {}\n", p.mu()));
    Ok(out)
}

pub fn diagram_rows(p: &Partition) -> Result<Vec<String>, RenderTooLarge> {
    if p.row_count() > MAX_RENDER_DIM || p.col_count() > MAX_RENDER_DIM {
        return Err(RenderTooLarge {
            rows: p.row_count(),
            cols: p.col_count(),
        });
    }
    Ok((1..=p.row_count())
        .map(|r| {
            (1..=p.part(r))
                .map(|s| char::from_digit((u64::from(r + s - 1) % 10) as u32, 10).unwrap())
                .collect()
        })
        .collect())
}
