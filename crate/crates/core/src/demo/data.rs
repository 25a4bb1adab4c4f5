//! Invented sample data shown by the demos.

use crate::grid::{GridColumn, GridState};
use crate::nav::{Menu, MenuAction, MenuItem};
use crate::tree::TreeNode;

pub const COUNTRIES: &[&str] = &[
    "Argentina",
    "Australia",
    "Brazil",
    "Canada",
    "Egypt",
    "France",
    "Germany",
    "India",
    "Japan",
    "Kenya",
    "Mexico",
    "Norway",
    "Spain",
    "Sweden",
];

pub const LANGUAGES: &[&str] = &["English", "Arabic", "French", "Spanish", "German"];

/// Ten invented people: ID, name, email, age, city.
pub const PEOPLE: [[&str; 5]; 10] = [
    ["1001", "Alice Moreau", "alice@example.com", "34", "Lyon"],
    ["1002", "Bilal Haddad", "bilal@example.com", "29", "Amman"],
    ["1003", "Chen Wei", "chen.wei@example.com", "41", "Shanghai"],
    ["1004", "Dana Novak", "dana.n@example.com", "25", "Prague"],
    ["1005", "Emeka Obi", "emeka@example.com", "38", "Lagos"],
    ["1006", "Freya Lund", "freya@example.com", "31", "Oslo"],
    ["1007", "Gabriel Souza", "gabriel@example.com", "47", "Recife"],
    ["1008", "Hana Sato", "hana.sato@example.com", "27", "Osaka"],
    ["1009", "Ivan Petrov", "ivan.p@example.com", "52", "Sofia"],
    ["1010", "Julia Weber", "julia@example.com", "36", "Vienna"],
];

/// The people table: row numbers under `#`, then ID, Name, Email, Age, City.
pub fn people_grid() -> GridState {
    let columns = vec![
        GridColumn::new("ID", 4),
        GridColumn::new("Name", 14),
        GridColumn::new("Email", 22),
        GridColumn::new("Age", 3),
        GridColumn::new("City", 10),
    ];
    let rows = PEOPLE.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect();
    GridState::new(columns, rows)
}

pub fn file_tree() -> Vec<TreeNode> {
    vec![TreeNode::branch(
        "C:\\",
        vec![
            TreeNode::branch(
                "Program Files",
                vec![
                    TreeNode::branch(
                        "Microsoft Office",
                        vec![TreeNode::leaf("Excel"), TreeNode::leaf("Word"), TreeNode::leaf("PowerPoint")],
                    ),
                    TreeNode::branch(
                        "Toolkit",
                        vec![
                            TreeNode::branch("bin", vec![TreeNode::leaf("app.exe"), TreeNode::leaf("pkg.exe")])
                                .expanded(),
                            TreeNode::branch("lib", vec![TreeNode::leaf("core.dll"), TreeNode::leaf("ui.dll")]),
                        ],
                    )
                    .expanded(),
                ],
            )
            .expanded(),
            TreeNode::branch("Users", vec![TreeNode::leaf("Public"), TreeNode::leaf("Guest")]),
            TreeNode::branch("Windows", vec![TreeNode::leaf("System32"), TreeNode::leaf("Fonts")]),
        ],
    )
    .expanded()]
}

pub fn org_tree() -> Vec<TreeNode> {
    vec![TreeNode::branch(
        "CEO",
        vec![
            TreeNode::branch(
                "CTO",
                vec![
                    TreeNode::branch(
                        "Engineering Manager",
                        vec![TreeNode::leaf("Developer"), TreeNode::leaf("QA Engineer")],
                    )
                    .expanded(),
                    TreeNode::branch("IT Manager", vec![TreeNode::leaf("Support Technician")]),
                ],
            )
            .expanded(),
            TreeNode::branch("CFO", vec![TreeNode::leaf("Accountant")]),
            TreeNode::branch("COO", vec![TreeNode::leaf("Operations Manager")]),
        ],
    )
    .expanded()]
}

fn size_menu(on: MenuAction) -> MenuItem {
    MenuItem::submenu(
        "Size",
        ["10pt", "12pt", "14pt", "16pt", "18pt"].iter().map(|s| MenuItem::action(s).on(on)).collect(),
    )
}

/// File/Edit/View/Format/Help. Every action item calls `on`.
pub fn demo_menus(on: MenuAction) -> Vec<Menu> {
    let a = |label: &str| MenuItem::action(label).on(on);
    vec![
        Menu::new(
            "File",
            vec![
                a("New").hint("Ctrl+N"),
                a("Open...").hint("Ctrl+O"),
                a("Save").hint("Ctrl+S"),
                MenuItem::separator(),
                a("Exit"),
            ],
        ),
        Menu::new(
            "Edit",
            vec![
                a("Undo").hint("Ctrl+Z"),
                MenuItem::separator(),
                a("Cut").hint("Ctrl+X"),
                a("Copy").hint("Ctrl+C"),
                a("Paste").hint("Ctrl+V"),
            ],
        ),
        Menu::new(
            "View",
            vec![
                MenuItem::check("Status Bar", true),
                MenuItem::check("Line Numbers", false),
                MenuItem::submenu("Zoom", vec![a("Zoom In"), a("Zoom Out"), a("Reset Zoom")]),
            ],
        ),
        Menu::new(
            "Format",
            vec![
                MenuItem::submenu(
                    "Font",
                    vec![
                        a("Arial"),
                        a("Times New Roman"),
                        a("Courier New"),
                        MenuItem::separator(),
                        MenuItem::check("Bold", false).hint("Ctrl+B"),
                        MenuItem::check("Italic", false).hint("Ctrl+I"),
                        MenuItem::check("Underline", false).hint("Ctrl+U"),
                        MenuItem::separator(),
                        size_menu(on),
                    ],
                ),
                size_menu(on),
            ],
        ),
        Menu::new("Help", vec![a("Contents").hint("F1"), MenuItem::separator(), a("About")]),
    ]
}
