#!/usr/bin/env python3
"""Build the acme fixture KB and its count manifest.

The data is authored here as literal tables; rerun after editing to refresh
fixtures/acme-kb.json and fixtures/acme-kb.manifest.json.
"""

import json
from pathlib import Path

from ontosearch.kb import Case, ClassDef, Department, Employee, dump_kb, make_kb

CLASSES = [
    ("Person", None),
    ("Employee", "Person"),
    ("Manager", "Employee"),
    ("SalesAgent", "Employee"),
    ("Accountant", "Employee"),
    ("TechnicianSupport", "Employee"),
    ("Department", None),
    ("Position", None),
    ("Product", None),
    ("Task", None),
]

DEPARTMENTS = [
    ("finance", "Finance", ["finance"]),
    ("sales", "Sales", ["sales"]),
    ("support", "Customer Support", ["support", "customer support", "helpdesk"]),
    ("engineering", "Engineering", ["engineering", "eng"]),
    ("hr", "Human Resources", ["hr", "human resources"]),
]

# id, full name, phone, position title, department
EMPLOYEES = [
    ("e1", "Margaret Osei", "+1-555-0101", "Finance Director", "finance"),
    ("e2", "Viktor Hansen", "+1-555-0102", "Senior Accountant", "finance"),
    ("e3", "Carla Mendes", "+1-555-0103", "Sales Director", "sales"),
    ("e4", "Tomasz Nowak", "+1-555-0104", "Support Manager", "support"),
    ("e5", "Aisha Rahman", "+1-555-0105", "Sales Agent, West Region", "sales"),
    ("e6", "Deepa Iyer", "+1-555-0106", "Engineering Manager", "engineering"),
    ("e7", "Jonas Keller", "+1-555-0107", "Accounts Payable Lead", "finance"),
    ("e8", "Lucia Ferraro", "+1-555-0108", "Returns Specialist", "support"),
    ("e9", "Petar Dimitrov", "+1-555-0109", "Billing Clerk", "finance"),
    ("e10", "Noor Al-Sayed", "+1-555-0110", "Sales Agent, East Region", "sales"),
    ("e11", "Sam Whitaker", "+1-555-0111", "Helpdesk Technician", "support"),
    ("e12", "Ingrid Bakke", "+1-555-0112", "Backend Developer", "engineering"),
    ("e13", "Rafael Ortiz", "+1-555-0113", "Systems Administrator", "engineering"),
    ("e14", "Yuki Tanaka", "+1-555-0114", "Payroll Specialist", "finance"),
    ("e15", "Bram De Vries", "+1-555-0115", "CRM Administrator", "sales"),
    ("e16", "Helena Vasquez", "+1-555-0116", "Field Technician", "support"),
    ("e17", "Olu Adebayo", "+1-555-0117", "Database Administrator", "engineering"),
    ("e18", "Mira Kovac", "+1-555-0118", "Web Developer", "engineering"),
    ("e19", "Daniel Cohen", "+1-555-0119", "HR Director", "hr"),
    ("e20", "Greta Lindqvist", "+1-555-0120", "Expense Auditor", "finance"),
    ("e21", "Mateo Rossi", "+1-555-0121", "Pricing Analyst", "sales"),
    ("e22", "Priya Nair", "+1-555-0122", "Hardware Technician", "support"),
    ("e23", "Anders Holm", "+1-555-0123", "Release Engineer", "engineering"),
    ("e24", "Fatima Zidane", "+1-555-0124", "Recruiter", "hr"),
    ("e25", "Ethan Park", "+1-555-0125", "Onboarding Coordinator", "hr"),
    ("e26", "Sofia Petrova", "+1-555-0126", "Benefits Administrator", "hr"),
    ("e27", "Liam Gallagher", "+1-555-0127", "Account Manager", "sales"),
    ("e28", "Chen Wei", "+1-555-0128", "Budget Analyst", "finance"),
    ("e29", "Rosa Jimenez", "+1-555-0129", "Customer Care Agent", "support"),
    ("e30", "Karim Haddad", "+1-555-0130", "QA Lead", "engineering"),
    ("e31", "Annika Berg", "+1-555-0131", "Training Coordinator", "hr"),
    ("e32", "Victor Ramos", "+1-555-0132", "Office Manager", "hr"),
    ("e33", "Hana Suzuki", "+1-555-0133", "Procurement Officer", "finance"),
    ("e34", "Piotr Zielinski", "+1-555-0134", "Quote Desk Specialist", "sales"),
    ("e35", "Leila Amari", "+1-555-0135", "Warranty Handler", "support"),
    ("e36", "Gustav Meyer", "+1-555-0136", "Security Engineer", "engineering"),
    ("e37", "Tara O'Brien", "+1-555-0137", "HR Assistant", "hr"),
    ("e38", "Diego Fuentes", "+1-555-0138", "Partnerships Lead", "sales"),
    ("e39", "Elif Demir", "+1-555-0139", "Knowledge Base Editor", "support"),
    ("e40", "Marcus Boateng", "+1-555-0140", "Network Engineer", "engineering"),
    ("e41", "Irina Sokolova", "+1-555-0141", "Tax Accountant", "finance"),
    ("e42", "Owen McAllister", "+1-555-0142", "Sales Operations Analyst", "sales"),
]

CONCEPTS = sorted(
    [
        # finance
        "invoice", "approve", "payment", "expense", "reimburse", "budget",
        "payroll", "salary", "tax", "purchase_order", "procurement", "audit",
        # sales
        "lead", "customer", "crm", "pricing", "discount", "quote", "contract",
        "order", "commission", "partner",
        # support
        "ticket", "printer", "hardware", "repair", "refund", "return",
        "warranty", "faq",
        # engineering
        "server", "database", "backup", "deploy", "release", "bug", "network",
        "vpn", "password", "email_setup", "laptop", "security", "website",
        # hr
        "onboarding", "hiring", "interview", "benefit", "vacation", "leave",
        "training", "badge", "policy",
    ]
)

# id, employee, concepts, case department (None = cross-department), factor, peers
CASES = [
    ("c1", "e7", ["invoice", "approve", "payment"], "finance", 0.9, 3),
    ("c2", "e9", ["invoice"], "finance", 1.0, 0),
    ("c3", "e1", ["approve", "budget"], "finance", 0.85, 2),
    ("c4", "e2", ["audit", "tax"], "finance", 0.9, 1),
    ("c5", "e14", ["payroll", "salary"], "finance", 0.95, 2),
    ("c6", "e20", ["expense", "reimburse", "audit"], "finance", 0.9, 1),
    ("c7", "e28", ["budget"], "finance", 0.8, 1),
    ("c8", "e33", ["purchase_order", "procurement"], "finance", 0.9, 2),
    ("c9", "e41", ["tax"], "finance", 0.95, 0),
    ("c10", "e3", ["contract", "partner"], "sales", 0.85, 2),
    ("c11", "e5", ["lead", "customer"], "sales", 0.9, 4),
    ("c12", "e10", ["lead", "customer"], "sales", 0.85, 4),
    ("c13", "e15", ["crm"], "sales", 1.0, 1),
    ("c14", "e21", ["pricing", "discount"], "sales", 0.9, 1),
    ("c15", "e27", ["customer", "contract"], "sales", 0.9, 3),
    ("c16", "e34", ["quote", "pricing"], "sales", 0.95, 2),
    ("c17", "e38", ["partner", "commission"], "sales", 0.9, 1),
    ("c18", "e42", ["order", "crm"], "sales", 0.85, 2),
    ("c19", "e4", ["ticket", "refund"], "support", 0.85, 3),
    ("c20", "e8", ["return", "refund"], "support", 0.95, 2),
    ("c21", "e11", ["ticket", "faq"], "support", 0.9, 5),
    ("c22", "e11", ["password", "email_setup"], "support", 0.8, 5),
    ("c23", "e16", ["repair", "hardware"], "support", 0.9, 2),
    ("c24", "e22", ["printer", "hardware", "repair"], "support", 0.95, 3),
    ("c25", "e29", ["customer", "ticket"], "support", 0.8, 4),
    ("c26", "e35", ["warranty", "return"], "support", 0.9, 1),
    ("c27", "e39", ["faq"], "support", 1.0, 0),
    ("c28", "e6", ["release", "deploy"], "engineering", 0.85, 2),
    ("c29", "e12", ["bug", "deploy"], "engineering", 0.9, 3),
    ("c30", "e13", ["server", "backup", "vpn"], "engineering", 0.95, 4),
    ("c31", "e17", ["database", "backup"], "engineering", 0.95, 2),
    ("c32", "e18", ["website", "bug"], "engineering", 0.85, 2),
    ("c33", "e23", ["release", "deploy"], "engineering", 0.95, 1),
    ("c34", "e30", ["bug"], "engineering", 0.9, 2),
    ("c35", "e36", ["security", "password", "vpn"], "engineering", 0.95, 2),
    ("c36", "e40", ["network", "vpn"], "engineering", 0.95, 3),
    ("c37", "e13", ["laptop"], "engineering", 0.85, 1),
    ("c38", "e19", ["policy", "hiring"], "hr", 0.85, 2),
    ("c39", "e24", ["hiring", "interview"], "hr", 0.95, 3),
    ("c40", "e25", ["onboarding", "badge", "training"], "hr", 0.95, 2),
    ("c41", "e26", ["benefit", "vacation", "leave"], "hr", 0.95, 2),
    ("c42", "e31", ["training"], "hr", 0.9, 1),
    ("c43", "e32", ["badge"], None, 0.9, 1),
    ("c44", "e37", ["payroll"], "finance", 0.7, 1),
    ("c45", "e37", ["leave"], "hr", 0.8, 0),
]

LEXICON = {
    # finance
    "invoice": ["invoice"],
    "bill": ["invoice"],
    "billing": ["invoice", "payment"],
    "approve": ["approve"],
    "approval": ["approve"],
    "payment": ["payment"],
    "pay": ["payment"],
    "expense": ["expense"],
    "spending": ["expense"],
    "reimburse": ["reimburse"],
    "reimbursement": ["reimburse"],
    "budget": ["budget"],
    "payroll": ["payroll"],
    "paycheck": ["payroll", "salary"],
    "salary": ["salary"],
    "wage": ["salary"],
    "tax": ["tax"],
    "vat": ["tax"],
    "purchase": ["purchase_order", "procurement"],
    "procurement": ["procurement"],
    "buy": ["procurement"],
    "audit": ["audit"],
    # sales
    "lead": ["lead"],
    "prospect": ["lead"],
    "customer": ["customer"],
    "client": ["customer"],
    "crm": ["crm"],
    "price": ["pricing"],
    "pricing": ["pricing"],
    "discount": ["discount"],
    "rebate": ["discount"],
    "quote": ["quote"],
    "quotation": ["quote"],
    "contract": ["contract"],
    "agreement": ["contract"],
    "order": ["order"],
    "commission": ["commission"],
    "partner": ["partner"],
    "reseller": ["partner"],
    # support
    "ticket": ["ticket"],
    "printer": ["printer"],
    "hardware": ["hardware"],
    "repair": ["repair"],
    "fix": ["repair"],
    "broken": ["repair", "hardware"],
    "refund": ["refund"],
    "return": ["return"],
    "warranty": ["warranty"],
    "faq": ["faq"],
    "knowledge": ["faq"],
    # engineering
    "server": ["server"],
    "database": ["database"],
    "db": ["database"],
    "backup": ["backup"],
    "restore": ["backup"],
    "deploy": ["deploy"],
    "deployment": ["deploy"],
    "release": ["release"],
    "bug": ["bug"],
    "defect": ["bug"],
    "crash": ["bug"],
    "network": ["network"],
    "wifi": ["network"],
    "vpn": ["vpn"],
    "password": ["password"],
    "reset": ["password"],
    "email": ["email_setup"],
    "mailbox": ["email_setup"],
    "laptop": ["laptop"],
    "computer": ["laptop"],
    "security": ["security"],
    "breach": ["security"],
    "website": ["website"],
    "web": ["website"],
    # hr
    "onboarding": ["onboarding"],
    "orientation": ["onboarding"],
    "newcomer": ["onboarding"],
    "hire": ["hiring"],
    "hiring": ["hiring"],
    "recruit": ["hiring"],
    "interview": ["interview"],
    "benefit": ["benefit"],
    "insurance": ["benefit"],
    "pension": ["benefit"],
    "vacation": ["vacation"],
    "holiday": ["vacation"],
    "leave": ["leave"],
    "sick": ["leave"],
    "training": ["training"],
    "train": ["training"],
    "badge": ["badge"],
    "keycard": ["badge"],
    "policy": ["policy"],
    "handbook": ["policy"],
}


def main():
    fixtures = Path(__file__).resolve().parent.parent / "fixtures"
    fixtures.mkdir(exist_ok=True)
    kb = make_kb(
        classes=[ClassDef(name, parent) for name, parent in CLASSES],
        concepts=CONCEPTS,
        departments=[Department(i, n, frozenset(a)) for i, n, a in DEPARTMENTS],
        employees=[
            Employee(eid, name, phone, f"{name.split()[0].lower()}.{name.split()[-1].lower()}@acme.example".replace("'", ""), title, dept)
            for eid, name, phone, title, dept in EMPLOYEES
        ],
        cases=[Case(cid, eid, frozenset(cs), dept, factor, peers) for cid, eid, cs, dept, factor, peers in CASES],
        lexicon=LEXICON,
    )
    kb_path = fixtures / "acme-kb.json"
    kb_path.write_bytes(dump_kb(kb))
    manifest = {
        "classes": len(kb.classes),
        "concepts": len(kb.concepts),
        "departments": len(kb.departments),
        "employees": len(kb.employees),
        "cases": len(kb.cases),
        "lexicon_entries": len(kb.lexicon),
    }
    (fixtures / "acme-kb.manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    print(f"wrote {kb_path}")
    print(json.dumps(manifest, sort_keys=True))


if __name__ == "__main__":
    main()
