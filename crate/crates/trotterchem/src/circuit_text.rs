//! Line-oriented circuit format: one gate per line, `KIND t1[,t2,...] angle`
//! with 1-based qubit labels. Lines starting with `#` are comments, except
//! `# qubits N` and `# placement I1,I2,... -> F1,F2,...`, which carry the
//! register size and the routing placement.

use serde::{Deserialize, Serialize};
use thiserror::Error;
use trotterchem_core::circuit::{Circuit, CircuitError, Gate, GateCounts, GateKind, Placement};

use crate::table::num;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}

fn labels(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| (x + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn to_text(circ: &Circuit) -> String {
    let mut out = format!("# qubits {}\n", circ.n_qubits());
    if let Some(p) = circ.placement() {
        out.push_str(&format!(
            "# placement {} -> {}\n",
            labels(&p.initial),
            labels(&p.final_)
        ));
    }
    for g in circ.gates() {
        out.push_str(&format!(
            "{} {} {}\n",
            g.kind,
            labels(&g.targets),
            num(g.angle)
        ));
    }
    out
}

fn parse_labels(s: &str, line: usize) -> Result<Vec<usize>, ParseError> {
    s.split(',')
        .map(|t| match t.trim().parse::<usize>() {
            Ok(q) if q >= 1 => Ok(q - 1),
            _ => Err(ParseError::Syntax {
                line,
                message: format!("bad qubit label {t:?}"),
            }),
        })
        .collect()
}

pub fn parse_text(text: &str) -> Result<Circuit, ParseError> {
    let mut n_qubits = None;
    let mut placement = None;
    let mut gates = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let s = raw.trim();
        if s.is_empty() {
            continue;
        }
        if let Some(comment) = s.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(n) = comment.strip_prefix("qubits ") {
                let n = n.trim().parse::<usize>().map_err(|_| ParseError::Syntax {
                    line,
                    message: format!("bad qubit count {n:?}"),
                })?;
                n_qubits = Some(n);
            } else if let Some(p) = comment.strip_prefix("placement ") {
                let (a, b) = p.split_once("->").ok_or_else(|| ParseError::Syntax {
                    line,
                    message: "placement needs `initial -> final`".into(),
                })?;
                placement = Some(Placement {
                    initial: parse_labels(a, line)?,
                    final_: parse_labels(b, line)?,
                });
            }
            continue;
        }
        let fields: Vec<&str> = s.split_whitespace().collect();
        let [kind, targets, angle] = fields[..] else {
            return Err(ParseError::Syntax {
                line,
                message: "expected `KIND targets angle`".into(),
            });
        };
        let kind = GateKind::from_name(kind).ok_or_else(|| ParseError::Syntax {
            line,
            message: format!("unknown gate kind {kind:?}"),
        })?;
        let angle = angle.parse::<f64>().map_err(|_| ParseError::Syntax {
            line,
            message: format!("bad angle {angle:?}"),
        })?;
        gates.push(Gate::new(kind, parse_labels(targets, line)?, angle)?);
    }
    let n = n_qubits.unwrap_or_else(|| {
        gates
            .iter()
            .flat_map(|g| g.targets.iter())
            .max()
            .map_or(0, |q| q + 1)
    });
    let circ = Circuit::from_gates(n, gates)?;
    Ok(match placement {
        Some(p) => circ.with_placement(p)?,
        None => circ,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BreakdownJson {
    pub r: usize,
    pub ud: usize,
    pub rz: usize,
    pub ry: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsJson {
    pub xx: usize,
    pub swap: usize,
    pub single: usize,
    pub ms: usize,
    pub zz: usize,
    pub single_breakdown: BreakdownJson,
}

impl From<&GateCounts> for CountsJson {
    fn from(c: &GateCounts) -> Self {
        let b = c.breakdown;
        CountsJson {
            xx: c.xx_two_qubit,
            swap: c.swap,
            single: c.single_qubit,
            ms: c.ms_multiqubit,
            zz: c.zz_two_qubit,
            single_breakdown: BreakdownJson {
                r: b.r,
                ud: b.ud,
                rz: b.rz,
                ry: b.ry,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GateJson {
    pub kind: String,
    pub targets: Vec<usize>,
    pub angle: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlacementJson {
    pub initial: Vec<usize>,
    #[serde(rename = "final")]
    pub final_: Vec<usize>,
}

/// JSON form of a circuit, with 1-based labels and its gate counts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CircuitJson {
    pub n_qubits: usize,
    pub placement: Option<PlacementJson>,
    pub counts: CountsJson,
    pub gates: Vec<GateJson>,
}

impl CircuitJson {
    pub fn of(circ: &Circuit) -> Self {
        let one_based = |xs: &[usize]| xs.iter().map(|x| x + 1).collect();
        CircuitJson {
            n_qubits: circ.n_qubits(),
            placement: circ.placement().map(|p| PlacementJson {
                initial: one_based(&p.initial),
                final_: one_based(&p.final_),
            }),
            counts: CountsJson::from(&GateCounts::of(circ)),
            gates: circ
                .gates()
                .iter()
                .map(|g| GateJson {
                    kind: g.kind.name().to_string(),
                    targets: one_based(&g.targets),
                    angle: g.angle,
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use trotterchem_core::circuit::{compile_trotter_step, optimize};
    use trotterchem_core::fermion_map::H2_STO3G;

    #[test]
    fn text_round_trip() {
        for circ in [
            compile_trotter_step(&H2_STO3G, 0.3),
            optimize(&compile_trotter_step(&H2_STO3G, 0.3)).unwrap(),
        ] {
            let back = parse_text(&to_text(&circ)).unwrap();
            assert_eq!(back, circ);
        }
    }

    #[test]
    fn labels_are_one_based() {
        let circ = Circuit::from_gates(4, vec![Gate::xx(0, 1, 0.5), Gate::rz(3, -0.25)]).unwrap();
        let text = to_text(&circ);
        assert!(text.contains("\nXX 1,2 5.0000000000000000e-1\n"), "{text}");
        assert!(text.contains("\nRZ 4 -2.5000000000000000e-1\n"), "{text}");
    }

    #[test]
    fn syntax_errors_name_the_line() {
        let err = parse_text("# qubits 2\nXX 1,2 0.1\nFOO 1 0.2\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 3, .. }));
        assert!(matches!(
            parse_text("RZ 0 0.1"),
            Err(ParseError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_text("RZ 1"),
            Err(ParseError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_text("XX 1 0.1"),
            Err(ParseError::Circuit(_))
        ));
    }

    #[test]
    fn json_counts_match() {
        let circ = optimize(&compile_trotter_step(&H2_STO3G, 0.3)).unwrap();
        let j = CircuitJson::of(&circ);
        assert_eq!((j.counts.xx, j.counts.swap, j.counts.single), (24, 24, 20));
        assert_eq!(j.gates.len(), circ.len());
        assert_eq!(j.placement.unwrap().initial, vec![1, 2, 4, 3]);
    }
}
