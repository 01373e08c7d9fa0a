//! Chat message types, the query formatter, and the reasoning-prompt
//! template registry.
//!
//! Template bodies live as text assets under `assets/templates/` with a
//! sha256 manifest, so their exact wording can be audited and snapshot
//! tested. Placeholders use `{name}` syntax and substitution is total: a
//! rendered body never contains an unbound placeholder.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::render::Canvas;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PromptError {
    #[error("unknown template id: {0}")]
    UnknownTemplate(String),
    #[error("template {template} is missing bindings: {missing:?}")]
    MissingBindings {
        template: String,
        missing: Vec<String>,
    },
    #[error("debate needs at least 2 prediction sets, got {0}")]
    DebateNeedsPlurality(usize),
    #[error("task kind {0} requires non-empty query text")]
    EmptyQuery(TaskKind),
    #[error("unknown task kind: {0}")]
    UnknownTaskKind(String),
    #[error("system messages must be text-only")]
    SystemWithImage,
    #[error("messages must have at least one part")]
    EmptyMessage,
}

/// One piece of multimodal content: text, or an image carried by content
/// hash so the same view is never attached twice under different ids.
#[derive(Debug, Clone)]
pub enum MessagePart {
    Text(String),
    Image { id: String, canvas: Arc<Canvas> },
}

impl MessagePart {
    pub fn image(canvas: Arc<Canvas>) -> Self {
        let id = canvas.content_hash();
        MessagePart::Image { id, canvas }
    }

    pub fn as_text(&self) -> Option<&str> {
        match self {
            MessagePart::Text(t) => Some(t),
            MessagePart::Image { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    System,
    User,
    Assistant,
}

impl Role {
    pub fn as_str(&self) -> &'static str {
        match self {
            Role::System => "system",
            Role::User => "user",
            Role::Assistant => "assistant",
        }
    }
}

/// An element of the chat history `H`.
#[derive(Debug, Clone)]
pub struct Message {
    role: Role,
    parts: Vec<MessagePart>,
}

impl Message {
    pub fn new(role: Role, parts: Vec<MessagePart>) -> Result<Self, PromptError> {
        if parts.is_empty() {
            return Err(PromptError::EmptyMessage);
        }
        if role == Role::System && parts.iter().any(|p| p.as_text().is_none()) {
            return Err(PromptError::SystemWithImage);
        }
        Ok(Self { role, parts })
    }

    pub fn system(text: impl Into<String>) -> Self {
        Self {
            role: Role::System,
            parts: vec![MessagePart::Text(text.into())],
        }
    }

    pub fn user_text(text: impl Into<String>) -> Self {
        Self {
            role: Role::User,
            parts: vec![MessagePart::Text(text.into())],
        }
    }

    pub fn assistant(text: impl Into<String>) -> Self {
        Self {
            role: Role::Assistant,
            parts: vec![MessagePart::Text(text.into())],
        }
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn parts(&self) -> &[MessagePart] {
        &self.parts
    }

    /// All text parts joined by newlines.
    pub fn text(&self) -> String {
        self.parts
            .iter()
            .filter_map(|p| p.as_text())
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// The five supported detection task flavours.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TaskKind {
    PlainDetection,
    OpenVocabulary,
    DescribedObject,
    ReferringExpression,
    Oriented,
}

impl TaskKind {
    pub const ALL: [TaskKind; 5] = [
        TaskKind::PlainDetection,
        TaskKind::OpenVocabulary,
        TaskKind::DescribedObject,
        TaskKind::ReferringExpression,
        TaskKind::Oriented,
    ];

    /// Identifier used in task files and transcripts.
    pub fn wire_name(&self) -> &'static str {
        match self {
            TaskKind::PlainDetection => "plain-detection",
            TaskKind::OpenVocabulary => "open-vocabulary",
            TaskKind::DescribedObject => "described-object",
            TaskKind::ReferringExpression => "referring-expression",
            TaskKind::Oriented => "oriented",
        }
    }

    /// Human name bound into the system template.
    pub fn display_name(&self) -> &'static str {
        match self {
            TaskKind::PlainDetection => "object detection",
            TaskKind::OpenVocabulary => "open-vocabulary object detection",
            TaskKind::DescribedObject => "described object detection",
            TaskKind::ReferringExpression => "referring expression comprehension",
            TaskKind::Oriented => "oriented object detection",
        }
    }

    pub fn parse(s: &str) -> Result<Self, PromptError> {
        Self::ALL
            .into_iter()
            .find(|k| k.wire_name() == s)
            .ok_or_else(|| PromptError::UnknownTaskKind(s.to_string()))
    }

    pub fn is_oriented(&self) -> bool {
        matches!(self, TaskKind::Oriented)
    }
}

impl fmt::Display for TaskKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.wire_name())
    }
}

/// A detection query: what to find, expressed over which image.
#[derive(Debug, Clone)]
pub struct TaskSpec {
    pub kind: TaskKind,
    pub query_text: String,
    pub image: Arc<Canvas>,
}

impl TaskSpec {
    pub fn new(
        kind: TaskKind,
        query_text: impl Into<String>,
        image: Arc<Canvas>,
    ) -> Result<Self, PromptError> {
        let query_text = query_text.into();
        if query_text.trim().is_empty() && kind != TaskKind::PlainDetection {
            return Err(PromptError::EmptyQuery(kind));
        }
        Ok(Self {
            kind,
            query_text,
            image,
        })
    }
}

/// A text template with named `{placeholder}` slots.
#[derive(Debug, Clone)]
pub struct PromptTemplate {
    pub id: &'static str,
    pub body: &'static str,
    pub required_bindings: BTreeSet<String>,
    pub attaches_image: bool,
}

fn placeholders(body: &str) -> BTreeSet<String> {
    let re = regex::Regex::new(r"\{([a-z_][a-z0-9_]*)\}").expect("static regex");
    re.captures_iter(body)
        .map(|c| c[1].to_string())
        .collect()
}

macro_rules! template_asset {
    ($id:literal, $attaches:expr) => {
        PromptTemplate {
            id: $id,
            body: include_str!(concat!("../assets/templates/", $id, ".txt")),
            required_bindings: placeholders(include_str!(concat!(
                "../assets/templates/",
                $id,
                ".txt"
            ))),
            attaches_image: $attaches,
        }
    };
}

/// The reasoning-prompt registry. Exactly six templates exist, one per
/// reasoning prompt plus the system-message template.
#[derive(Debug, Clone)]
pub struct TemplateRegistry {
    templates: BTreeMap<&'static str, PromptTemplate>,
}

impl TemplateRegistry {
    pub fn builtin() -> Self {
        let list = [
            template_asset!("problem_insight_guider", true),
            template_asset!("spatial_relationship_explorer", false),
            template_asset!("contextual_object_predictor", false),
            template_asset!("self_verification_promoter", false),
            template_asset!("debate_organizer", false),
            template_asset!("expertise_identifier", false),
        ];
        Self {
            templates: list.into_iter().map(|t| (t.id, t)).collect(),
        }
    }

    pub fn ids(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.templates.keys().copied()
    }

    pub fn get(&self, id: &str) -> Result<&PromptTemplate, PromptError> {
        self.templates
            .get(id)
            .ok_or_else(|| PromptError::UnknownTemplate(id.to_string()))
    }

    /// Substitute `bindings` into a template body. Every placeholder must be
    /// bound; the output never contains a residual `{name}` marker.
    pub fn render(
        &self,
        id: &str,
        bindings: &BTreeMap<String, String>,
    ) -> Result<String, PromptError> {
        let template = self.get(id)?;
        let missing: Vec<String> = template
            .required_bindings
            .iter()
            .filter(|name| !bindings.contains_key(*name))
            .cloned()
            .collect();
        if !missing.is_empty() {
            return Err(PromptError::MissingBindings {
                template: id.to_string(),
                missing,
            });
        }
        let mut out = template.body.to_string();
        for name in &template.required_bindings {
            out = out.replace(&format!("{{{name}}}"), &bindings[name]);
        }
        Ok(out)
    }
}

/// The system message: the expertise template bound to the task kind.
pub fn expertise_identifier(registry: &TemplateRegistry, task: &TaskSpec) -> Message {
    let mut bindings = BTreeMap::new();
    bindings.insert(
        "the_target_task".to_string(),
        task.kind.display_name().to_string(),
    );
    let text = registry
        .render("expertise_identifier", &bindings)
        .expect("builtin template");
    Message::system(text)
}

/// Render a reasoning template as a user message.
pub fn render_reasoning_prompt(
    registry: &TemplateRegistry,
    id: &str,
    bindings: &BTreeMap<String, String>,
) -> Result<Message, PromptError> {
    Ok(Message::user_text(registry.render(id, bindings)?))
}

/// Coordinate convention text for axis-aligned answers. Word-for-word the
/// grammar the parser accepts; changing one requires changing the other.
pub const AXIS_FORMAT_CONTRACT: &str = "Regions are represented by (x1,y1,x2,y2) coordinates. \
x1 x2 are the left and right most positions, normalized into 0 to 1, \
where 0 is the left and 1 is the right. y1 y2 are the top and bottom most positions, \
normalized into 0 to 1, where 0 is the top and 1 is the bottom.";

/// Coordinate convention text for oriented answers.
pub const ORIENTED_FORMAT_CONTRACT: &str = "Regions are represented by (cx,cy,w,h,angle) tuples. \
cx and cy are the center position and w and h are the side lengths, all normalized into 0 to 1. \
angle is the rotation in degrees within [0,180), measured from the horizontal axis toward the \
bottom of the image.";

/// How the model must mark its final answer.
pub const FINAL_ANSWER_CONTRACT: &str = "Report one object per line as `label: (coordinates)`. \
When you are confident the detections are complete and correct, reply with the words \
\"final prediction\" and repeat every detection inside a triple-backtick block.";

fn task_lead(task: &TaskSpec) -> String {
    let q = task.query_text.trim();
    match task.kind {
        TaskKind::PlainDetection => {
            "Detect every object visible in the image and report one bounding box per object \
             instance."
                .to_string()
        }
        TaskKind::OpenVocabulary => format!(
            "Detect every instance of the following categories in the image: {q}."
        ),
        TaskKind::DescribedObject => format!(
            "Determine whether any object in the image matches the following description, and \
             locate every match (report nothing if no object matches): {q}"
        ),
        TaskKind::ReferringExpression => {
            format!("Locate the single object referred to by the following expression: {q}")
        }
        TaskKind::Oriented => format!(
            "Detect every instance of the following categories, reporting one oriented bounding \
             box per instance: {q}."
        ),
    }
}

/// Format the test-time query: a system message from the expertise template
/// and a user message carrying the task description, the answer-format
/// contract, and the query image.
pub fn format_query(registry: &TemplateRegistry, task: &TaskSpec) -> Vec<Message> {
    let system = expertise_identifier(registry, task);
    let contract = if task.kind.is_oriented() {
        ORIENTED_FORMAT_CONTRACT
    } else {
        AXIS_FORMAT_CONTRACT
    };
    let text = format!(
        "{}\n\n{}\n\n{}",
        task_lead(task),
        contract,
        FINAL_ANSWER_CONTRACT
    );
    let user = Message::new(
        Role::User,
        vec![
            MessagePart::Text(text),
            MessagePart::image(task.image.clone()),
        ],
    )
    .expect("non-empty user message");
    vec![system, user]
}

/// The debate aggregation prompt over two or more serialized answers.
pub fn debate_prompt(
    registry: &TemplateRegistry,
    predictions: &[String],
) -> Result<Message, PromptError> {
    if predictions.len() < 2 {
        return Err(PromptError::DebateNeedsPlurality(predictions.len()));
    }
    let numbered = predictions
        .iter()
        .enumerate()
        .map(|(i, p)| format!("{}. {}", i + 1, p))
        .collect::<Vec<_>>()
        .join("\n");
    let mut bindings = BTreeMap::new();
    bindings.insert("predictions".to_string(), format!("\n{numbered}\n"));
    render_reasoning_prompt(registry, "debate_organizer", &bindings)
}

/// Detection difficulty classes the insight guider can speak about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Difficulty {
    Small,
    Occluded,
    Crowded,
    Oriented,
}

impl Difficulty {
    pub fn display_name(&self) -> &'static str {
        match self {
            Difficulty::Small => "small object",
            Difficulty::Occluded => "occluded object",
            Difficulty::Crowded => "crowded object",
            Difficulty::Oriented => "oriented object",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "small" => Some(Difficulty::Small),
            "occluded" => Some(Difficulty::Occluded),
            "crowded" => Some(Difficulty::Crowded),
            "oriented" => Some(Difficulty::Oriented),
            _ => None,
        }
    }
}

/// The insight-guider message: a difficulty statement, optionally followed
/// by a demonstration image and its rationale as further parts.
pub fn problem_insight_prompt(
    registry: &TemplateRegistry,
    difficulty: Difficulty,
    demo: Option<(Arc<Canvas>, String)>,
) -> Message {
    let mut bindings = BTreeMap::new();
    bindings.insert(
        "difficulty".to_string(),
        difficulty.display_name().to_string(),
    );
    let body = registry
        .render("problem_insight_guider", &bindings)
        .expect("builtin template");
    // Line 1 states the difficulty; line 2 announces the demonstration and
    // only appears when a demonstration is attached.
    let mut lines = body.lines();
    let statement = lines.next().unwrap_or_default().to_string();
    let announcement = lines.next().unwrap_or_default().to_string();
    let parts = match demo {
        None => vec![MessagePart::Text(statement)],
        Some((canvas, rationale)) => vec![
            MessagePart::Text(format!("{statement} {announcement}")),
            MessagePart::image(canvas),
            MessagePart::Text(rationale),
        ],
    };
    Message::new(Role::User, parts).expect("non-empty parts")
}
