//! Informational ASCII renderings of classes on their ambient root posets.
//!
//! The output is a human-facing view, not a parse format: used roots are
//! `●`, unused roots `○`, and region boundaries are diagonal rules.

use std::collections::HashSet;

use ryd_core::poset::LieFamily;
use ryd_core::ryd::{perm_from_ryd, Charge, IsotropicRYD};

use crate::error::{invariant, Result};
use crate::wire::{
    from_value, has_key, parse_json, FlagClass, IsotropicClass, SpaceName, TwoRowClass,
    TwoRowRender,
};

const USED: char = '●';
const UNUSED: char = '○';

pub fn cmd_render(input: &str) -> Result<String> {
    let value = parse_json(input)?;
    if has_key(&value, "space") {
        let req: TwoRowRender = from_value(value)?;
        render_two_row(&req)
    } else if has_key(&value, "family") {
        let class: IsotropicClass = from_value(value)?;
        Ok(render_isotropic(&class.to_ryd()?))
    } else {
        let class: FlagClass = from_value(value)?;
        render_flag(&class)
    }
}

fn push_trimmed(out: &mut String, line: &str) {
    out.push_str(line.trim_end());
    out.push('\n');
}

// ---------------------------------------------------------------------------
// Flag diagrams: the type A root poset drawn as a diamond, highest root on
// top, simple roots along the bottom, with the region rules of the k-cuts.

fn render_flag(class: &FlagClass) -> Result<String> {
    let ryd = class.to_ryd()?;
    let shape = ryd.shape().clone();
    let n = shape.n();
    let perm = perm_from_ryd(&ryd).map_err(invariant)?;
    let mut out = format!(
        "flag diagram  n={n}  k={:?}  perm={:?}\n",
        shape.k(),
        perm.one_line()
    );
    let used: HashSet<(usize, usize)> = ryd.root_set().iter().map(|r| (r.a, r.b)).collect();
    // root (a,b) sits at line 2(n−1−(b−a)), column 2(a+b−3)
    let height = 2 * n - 3;
    let width = 4 * n - 7;
    let mut grid = vec![vec![' '; width]; height];
    for a in 1..n {
        for b in a + 1..=n {
            let line = 2 * (n - 1 - (b - a));
            let col = 2 * (a + b - 3);
            grid[line][col] = if used.contains(&(a, b)) { USED } else { UNUSED };
        }
    }
    // region rules: for each cut c, a `\` separates (c,b) from (c+1,b) and
    // a `/` separates (a,c) from (a,c+1)
    for &c in shape.k() {
        for b in c + 2..=n {
            grid[2 * (n - 1 - (b - c)) + 1][2 * (c + b - 3) + 1] = '\\';
        }
        for a in 1..c {
            grid[2 * (n - 1 - (c - a)) - 1][2 * (a + c - 3) + 1] = '/';
        }
    }
    for line in grid {
        push_trimmed(&mut out, &line.into_iter().collect::<String>());
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Shared row pieces for the orthogonal posets.

/// A plain chain of `len` cells, the first `v` of them used.
fn chain_line(len: u32, v: u32) -> String {
    let mut line = String::new();
    for c in 1..=len {
        if c > 1 {
            line.push(' ');
        }
        line.push(if v >= c { USED } else { UNUSED });
    }
    line
}

/// A fork row of `2f` elements: a chain of `f−1`, two incomparable fork
/// cells stacked at column `f`, and a tail chain of `f−1`.  An ideal of
/// size exactly `f` uses the fork cell named by the charge.
fn fork_lines(f: u32, v: u32, charge: Option<Charge>) -> [String; 3] {
    let fork_pos = 2 * (f - 1) as usize;
    let fork_cell = |want: Charge| {
        let used = v > f || (v == f && charge == Some(want));
        format!(
            "{}{}",
            " ".repeat(fork_pos),
            if used { USED } else { UNUSED }
        )
    };
    let mut mid = String::new();
    for col in 1..=2 * f - 1 {
        if col > 1 {
            mid.push(' ');
        }
        if col < f {
            mid.push(if v >= col { USED } else { UNUSED });
        } else if col == f {
            // the fork cells sit above and below this column
            mid.push(' ');
        } else {
            // tail element col−f needs ideal size f+1+(col−f) = col+1
            mid.push(if v > col { USED } else { UNUSED });
        }
    }
    [fork_cell(Charge::Up), mid, fork_cell(Charge::Down)]
}

// ---------------------------------------------------------------------------
// Isotropic diagrams: top staircase over a rule over the base rows.

fn render_isotropic(ryd: &IsotropicRYD) -> String {
    let family = match ryd.family {
        LieFamily::B => "B",
        LieFamily::D => "D",
    };
    let mut out = format!(
        "isotropic diagram  family={family}  n={}  k={}\n",
        ryd.n, ryd.k
    );
    if let Some(charge) = ryd.charge {
        out.push_str(match charge {
            Charge::Up => "charge: up\n",
            Charge::Down => "charge: down\n",
        });
    }
    let k = ryd.k;
    if k >= 2 {
        // top row i pairs base row i with each base row j > i
        for i in 1..k {
            let mut line = " ".repeat(2 * i);
            for j in i + 1..=k {
                if j > i + 1 {
                    line.push(' ');
                }
                line.push(if ryd.top_root_used(i, j) {
                    USED
                } else {
                    UNUSED
                });
            }
            push_trimmed(&mut out, &line);
        }
    }
    let cell_width = match ryd.family {
        LieFamily::B => 2 * ryd.row_len() as usize - 1,
        LieFamily::D => 2 * (ryd.row_len() as usize - 1) - 1,
    };
    push_trimmed(&mut out, &"-".repeat(cell_width.max(1)));
    match ryd.family {
        LieFamily::B => {
            for &v in &ryd.base {
                push_trimmed(&mut out, &chain_line(ryd.row_len(), v));
            }
        }
        LieFamily::D => {
            let f = (ryd.n - ryd.k) as u32;
            for &v in &ryd.base {
                for line in fork_lines(f, v, ryd.charge) {
                    push_trimmed(&mut out, &line);
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Two-row diagrams for the star-product spaces.

fn render_two_row(req: &TwoRowRender) -> Result<String> {
    let class = TwoRowClass {
        base: req.base.clone(),
        top: req.top,
        charge: req.charge,
    };
    match req.space {
        SpaceName::LG => {
            let c = class.to_coadjoint(req.n)?;
            let mut out = format!("lagrangian two-row diagram  n={}\n", req.n);
            out.push_str(if c.top_used {
                "top: ●\n"
            } else {
                "top: ○\n"
            });
            let width = 2 * req.n - 3;
            push_trimmed(&mut out, &chain_line(width, c.base.0));
            push_trimmed(&mut out, &chain_line(width, c.base.1));
            Ok(out)
        }
        SpaceName::OG => {
            let c = class.to_adjoint(req.n)?;
            let mut out = format!("orthogonal two-row diagram  n={}\n", req.n);
            if let Some(charge) = c.charge {
                out.push_str(match charge {
                    Charge::Up => "charge: up\n",
                    Charge::Down => "charge: down\n",
                });
            }
            out.push_str(if c.top_used {
                "top: ●\n"
            } else {
                "top: ○\n"
            });
            let f = req.n - 2;
            for v in [c.base.0, c.base.1] {
                for line in fork_lines(f, v, c.charge) {
                    push_trimmed(&mut out, &line);
                }
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_line_fills_a_prefix() {
        assert_eq!(chain_line(4, 2), "● ● ○ ○");
        assert_eq!(chain_line(1, 0), "○");
    }

    #[test]
    fn fork_lines_respect_the_charge() {
        // f=3: chain of 2, fork at column 3, tail of 2
        let [up, mid, down] = fork_lines(3, 3, Some(Charge::Up));
        assert_eq!(up, "    ●");
        assert_eq!(mid, "● ●   ○ ○");
        assert_eq!(down, "    ○");
        let [up, _, down] = fork_lines(3, 3, Some(Charge::Down));
        assert_eq!(up, "    ○");
        assert_eq!(down, "    ●");
        // past the fork both cells are used
        let [up, mid, down] = fork_lines(3, 5, None);
        assert_eq!(up, "    ●");
        assert_eq!(mid, "● ●   ● ○");
        assert_eq!(down, "    ●");
    }
}
