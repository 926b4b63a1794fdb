//! The JSON report emitted on stdout, plus the aligned `--pretty` rendering.
//! Coalition entries are always ordered by ascending bitmask, so reports are
//! byte-identical across runs.

use serde::Serialize;

#[derive(Serialize, Default)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_digest: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transform: Option<TransformSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shapley: Option<ShapleySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub core: Option<CoreSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<ChecksSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<ClassSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated: Option<GeneratedSection>,
}

#[derive(Serialize)]
pub struct TransformSection {
    pub procedure: String,
    pub orientation: String,
    pub worths: Vec<CoalitionWorth>,
    pub witnesses: Vec<CoalitionWitness>,
}

#[derive(Serialize)]
pub struct CoalitionWorth {
    pub coalition: String,
    pub worth: String,
}

#[derive(Serialize)]
pub struct CoalitionWitness {
    pub coalition: String,
    pub profile: String,
}

#[derive(Serialize)]
pub struct ShapleySection {
    /// Transform applied first when the input was a family.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub via: Option<String>,
    pub allocation: Vec<PlayerValue>,
}

#[derive(Serialize)]
pub struct PlayerValue {
    pub player: String,
    pub value: String,
}

#[derive(Serialize)]
pub struct CoreSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub via: Option<String>,
    pub orientation: String,
    pub grand_worth: String,
    pub balanced: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<PlayerValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub member: Option<MemberTest>,
}

#[derive(Serialize)]
pub struct MemberTest {
    pub allocation: Vec<String>,
    pub is_member: bool,
}

#[derive(Serialize)]
pub struct ChecksSection {
    pub mode: String,
    pub verdicts: Vec<Verdict>,
    pub all_passed: bool,
}

#[derive(Serialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    /// For conditional claims: whether the hypothesis held (a failed
    /// hypothesis passes vacuously).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis: Option<bool>,
}

#[derive(Serialize)]
pub struct ClassSection {
    pub class: String,
    pub is_family: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transform: Option<Vec<CoalitionWorth>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub most_costly_player: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pivot: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minorant: Option<Vec<CoalitionWorth>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub balanced: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub concave: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transform_is_simple: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub veto_player: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub veto_matches_balancedness: Option<bool>,
}

#[derive(Serialize)]
pub struct GeneratedSection {
    pub seed: u64,
    pub players: usize,
    pub max_strats: usize,
    pub class: String,
    pub path: String,
    pub digest: String,
}

impl Report {
    pub fn new(command: String) -> Self {
        Report {
            command,
            ..Report::default()
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("serializable report");
        out.push('\n');
        out
    }

    pub fn to_pretty(&self) -> String {
        let mut out = String::new();
        let push_line = |out: &mut String, line: String| {
            out.push_str(&line);
            out.push('\n');
        };
        push_line(&mut out, format!("command: {}", self.command));
        if let Some(digest) = &self.input_digest {
            push_line(&mut out, format!("input:   {digest}"));
        }
        if let Some(t) = &self.transform {
            push_line(
                &mut out,
                format!("\n{} transform ({} orientation)", t.procedure, t.orientation),
            );
            let witness_of = |coalition: &str| {
                t.witnesses
                    .iter()
                    .find(|w| w.coalition == coalition)
                    .map(|w| w.profile.clone())
                    .unwrap_or_default()
            };
            let rows: Vec<[String; 3]> = t
                .worths
                .iter()
                .map(|w| {
                    [
                        w.coalition.clone(),
                        w.worth.clone(),
                        witness_of(&w.coalition),
                    ]
                })
                .collect();
            out.push_str(&table(&["S", "worth", "profile"], &rows));
        }
        if let Some(s) = &self.shapley {
            match &s.via {
                Some(via) => push_line(&mut out, format!("\nShapley value (via {via})")),
                None => push_line(&mut out, "\nShapley value".to_string()),
            }
            let rows: Vec<[String; 2]> = s
                .allocation
                .iter()
                .map(|p| [p.player.clone(), p.value.clone()])
                .collect();
            out.push_str(&table(&["player", "value"], &rows));
        }
        if let Some(c) = &self.core {
            push_line(&mut out, format!("\ncore ({} orientation)", c.orientation));
            push_line(&mut out, format!("grand worth: {}", c.grand_worth));
            push_line(&mut out, format!("balanced:    {}", c.balanced));
            if let Some(w) = &c.witness {
                let values: Vec<String> = w.iter().map(|p| p.value.clone()).collect();
                push_line(&mut out, format!("witness:     ({})", values.join(", ")));
            }
            if let Some(vs) = &c.vertices {
                push_line(&mut out, format!("vertices:    {}", vs.len()));
                for v in vs {
                    push_line(&mut out, format!("  ({})", v.join(", ")));
                }
            }
            if let Some(m) = &c.member {
                push_line(
                    &mut out,
                    format!(
                        "member:      ({}) -> {}",
                        m.allocation.join(", "),
                        m.is_member
                    ),
                );
            }
        }
        if let Some(c) = &self.checks {
            push_line(&mut out, format!("\nchecks ({})", c.mode));
            let rows: Vec<[String; 3]> = c
                .verdicts
                .iter()
                .map(|v| {
                    [
                        v.name.clone(),
                        if v.passed { "pass" } else { "FAIL" }.to_string(),
                        match v.hypothesis {
                            Some(true) => "hypothesis held".to_string(),
                            Some(false) => "vacuous (hypothesis failed)".to_string(),
                            None => String::new(),
                        },
                    ]
                })
                .collect();
            out.push_str(&table(&["check", "verdict", "note"], &rows));
            push_line(&mut out, format!("all passed: {}", c.all_passed));
        }
        if let Some(c) = &self.class {
            push_line(&mut out, format!("\nclass: {}", c.class));
            push_line(&mut out, format!("is {} family: {}", c.class, c.is_family));
            if let Some(t) = &c.transform {
                let rows: Vec<[String; 2]> = t
                    .iter()
                    .map(|w| [w.coalition.clone(), w.worth.clone()])
                    .collect();
                out.push_str(&table(&["S", "worth"], &rows));
            }
            if let Some(p) = &c.most_costly_player {
                push_line(&mut out, format!("most costly player: {p}"));
            }
            if let Some(p) = &c.pivot {
                push_line(&mut out, format!("pivot: {p}"));
            }
            if let Some(m) = &c.minorant {
                let costs: Vec<String> = m
                    .iter()
                    .filter(|w| !w.coalition.contains('+'))
                    .map(|w| w.worth.clone())
                    .collect();
                push_line(&mut out, format!("minorant costs: ({})", costs.join(", ")));
            }
            if let Some(b) = c.balanced {
                push_line(&mut out, format!("balanced: {b}"));
            }
            if let Some(v) = c.concave {
                push_line(&mut out, format!("concave: {v}"));
            }
            if let Some(v) = c.transform_is_simple {
                push_line(&mut out, format!("transform is simple: {v}"));
            }
            if let Some(p) = &c.veto_player {
                push_line(&mut out, format!("veto player: {p}"));
            }
            if let Some(v) = c.veto_matches_balancedness {
                push_line(&mut out, format!("veto matches balancedness: {v}"));
            }
        }
        if let Some(g) = &self.generated {
            push_line(
                &mut out,
                format!(
                    "\ngenerated {} instance: seed {}, {} players, up to {} strategies",
                    g.class, g.seed, g.players, g.max_strats
                ),
            );
            push_line(&mut out, format!("written to {} ({})", g.path, g.digest));
        }
        out
    }
}

fn table<const K: usize>(header: &[&str; K], rows: &[[String; K]]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (k, cell) in row.iter().enumerate() {
            widths[k] = widths[k].max(cell.len());
        }
    }
    let render = |cells: &[String]| -> String {
        let mut line = String::new();
        for (k, cell) in cells.iter().enumerate() {
            if k > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            for _ in cell.len()..widths[k] {
                line.push(' ');
            }
        }
        line.trim_end().to_string()
    };
    let mut out = String::new();
    let header: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    out.push_str(&render(&header));
    out.push('\n');
    for row in rows {
        out.push_str(&render(row));
        out.push('\n');
    }
    out
}
