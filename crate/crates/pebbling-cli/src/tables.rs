//! Embedded reference values for the `tables` subcommand.
//!
//! Two kinds of static data live here, both inputs for comparison rather
//! than anything this tool computes:
//!
//! - `expected_lambda`: the ratio each bundled certificate is known to
//!   evaluate to. Consulted only under `--check`; the printed numbers are
//!   always recomputed from the certificates at invocation.
//! - `prior_lambda`: previously published bounds for the same targets,
//!   shown alongside ours for comparison.

use pebbling::families::Family;
use pebbling::Rational;

fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom).expect("nonzero denominator")
}

fn int(value: i64) -> Rational {
    Rational::from_int(value)
}

/// `k` and `2^{k+2}` for the flower snark `J_m`, `m = 2k + 1`.
fn flower_terms(m: u32) -> (i64, Rational) {
    let k = i64::from((m - 1) / 2);
    (k, Rational::pow2(k as i32 + 2))
}

/// The ratio the bundled certificate for this (family, target) is known to
/// evaluate to; `None` when no certificate is bundled.
pub fn expected_lambda(family: &Family, target: &str) -> Option<Rational> {
    match family {
        Family::Petersen => (target == "a_0").then(|| int(9)),
        Family::Blanusa1 => match target {
            "a_1" => Some(int(30)),
            "b_1" => Some(int(26)),
            "c_1" => Some(int(29)),
            "d_1" => Some(rat(141, 5)),
            "e_1" => Some(int(29)),
            _ => None,
        },
        Family::Blanusa2 => match target {
            "x_1" | "x_3" => Some(rat(117, 4)),
            "x_2" | "z_1" => Some(rat(133, 5)),
            "z_2" => Some(int(29)),
            "z_3" => Some(rat(136, 5)),
            _ => None,
        },
        Family::Flower(3) => match target {
            "x_0" | "v_0" => Some(rat(64, 5)),
            "z_0" => Some(int(12)),
            _ => None,
        },
        Family::Flower(m) if m % 2 == 1 => {
            let (k, pow) = flower_terms(*m);
            match target {
                "x_0" => Some(rat(13, 10) * pow + int(6 * k - 5)),
                "v_0" => Some(rat(8, 5) * pow + int(2 * k) - rat(8, 5)),
                "z_0" => Some(rat(3, 2) * pow + int(2 * k - 2)),
                _ => None,
            }
        }
        Family::Flower(_) => None,
        // The cube certificate meets the ring-counting floor exactly:
        // λ = Σ_j max{C(d, j), 2^{d−j}}.
        Family::Cube(d) => {
            let all_zeros = "0".repeat(*d as usize);
            (target == all_zeros)
                .then(|| int(pebbling::bounds::cube_ratio_floor(*d) as i64))
        }
    }
}

/// Previously published bound for this (family, target), where one exists.
pub fn prior_lambda(family: &Family, target: &str) -> Option<Rational> {
    match family {
        Family::Blanusa2 => match target {
            "x_1" => Some(int(30)),
            "x_2" => Some(int(31)),
            "x_3" => Some(rat(236, 7)),
            "z_1" => Some(rat(133, 5)),
            "z_2" => Some(int(30)),
            "z_3" => Some(int(32)),
            _ => None,
        },
        Family::Flower(3) => {
            matches!(target, "x_0" | "v_0" | "z_0").then(|| rat(64, 5))
        }
        Family::Flower(5) => {
            matches!(target, "x_0" | "v_0" | "z_0").then(|| rat(146, 5))
        }
        Family::Flower(7) => match target {
            "x_0" => Some(rat(284, 5)),
            "v_0" => Some(rat(278, 5)),
            "z_0" => Some(int(60)),
            _ => None,
        },
        Family::Flower(m) if *m > 7 && m % 2 == 1 => {
            let (k, pow) = flower_terms(*m);
            match target {
                "x_0" => Some(rat(17, 10) * pow + int(2 * k) - rat(18, 5)),
                "v_0" => Some(rat(8, 5) * pow + int(2 * k) - rat(8, 5)),
                "z_0" => Some(rat(9, 5) * pow + int(2 * k) - rat(18, 5)),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Previously published bound for the whole graph (their worst target).
pub fn prior_lambda_graph(family: &Family) -> Option<Rational> {
    match family {
        Family::Blanusa2 => Some(rat(236, 7)),
        Family::Flower(3) => Some(rat(64, 5)),
        // For m ≥ 5 the published per-target values peak at z_0.
        Family::Flower(m) if *m >= 5 => prior_lambda(family, "z_0"),
        _ => None,
    }
}
