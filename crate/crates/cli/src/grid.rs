//! Parameter grids: `start:stop:lin|log[:count]`, endpoints inclusive, or a
//! single value.

use anyhow::{bail, Context, Result};

const DEFAULT_POINTS: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Spacing {
    Lin,
    Log,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    start: f64,
    stop: f64,
    spacing: Spacing,
    points: usize,
}

impl Grid {
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(':').collect();
        let number = |s: &str| -> Result<f64> {
            let x: f64 = s
                .trim()
                .parse()
                .with_context(|| format!("bad number {s:?} in grid {text:?}"))?;
            if !x.is_finite() {
                bail!("grid value {s:?} is not finite");
            }
            Ok(x)
        };
        let grid = match parts.as_slice() {
            [single] => {
                let x = number(single)?;
                Self {
                    start: x,
                    stop: x,
                    spacing: Spacing::Lin,
                    points: 1,
                }
            }
            [start, stop, spacing, rest @ ..] if rest.len() <= 1 => {
                let spacing = match *spacing {
                    "lin" => Spacing::Lin,
                    "log" => Spacing::Log,
                    other => bail!("grid spacing must be lin or log, got {other:?}"),
                };
                let points = match rest {
                    [n] => n
                        .parse()
                        .with_context(|| format!("bad point count {n:?}"))?,
                    _ => DEFAULT_POINTS,
                };
                Self {
                    start: number(start)?,
                    stop: number(stop)?,
                    spacing,
                    points,
                }
            }
            _ => bail!("grid must look like start:stop:lin|log[:count], got {text:?}"),
        };
        if grid.points == 0 {
            bail!("grid {text:?} has no points");
        }
        if grid.stop < grid.start {
            bail!("grid {text:?} runs backwards");
        }
        if grid.spacing == Spacing::Log && grid.start <= 0.0 {
            bail!("log grid {text:?} must start above zero");
        }
        Ok(grid)
    }

    pub fn values(&self) -> Vec<f64> {
        if self.points == 1 || self.start == self.stop {
            return vec![self.start];
        }
        let last = (self.points - 1) as f64;
        (0..self.points)
            .map(|i| {
                if i + 1 == self.points {
                    return self.stop;
                }
                let t = i as f64 / last;
                match self.spacing {
                    Spacing::Lin => self.start + t * (self.stop - self.start),
                    Spacing::Log => {
                        (self.start.ln() + t * (self.stop.ln() - self.start.ln())).exp()
                    }
                }
            })
            .collect()
    }

    /// Grid values rounded to integers, deduplicated, in increasing order.
    pub fn genera(&self) -> Result<Vec<u64>> {
        let mut out: Vec<u64> = Vec::new();
        for x in self.values() {
            if x < 0.0 {
                bail!("genus grid value {x} is negative");
            }
            let g = x.round() as u64;
            if out.last() != Some(&g) {
                out.push(g);
            }
        }
        Ok(out)
    }
}

/// Systole choice on the command line: a number or `auto` for `ln(2g^2)`.
#[derive(Debug, Clone, PartialEq)]
pub enum SystoleArg {
    Auto,
    Values(Vec<f64>),
}

impl SystoleArg {
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim() == "auto" {
            return Ok(Self::Auto);
        }
        Ok(Self::Values(Grid::parse(text)?.values()))
    }
}
