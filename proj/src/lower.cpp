#include "archdl/lower.hpp"

#include <functional>

namespace archdl {

namespace {

class Lowering {
public:
    std::pair<ArchitectureModel, std::vector<Diagnostic>> run(const ast::ModelAst& ast) {
        for (const auto& decl : ast.declarations) {
            std::visit([this](const auto& d) { declare(d); }, decl);
        }
        for (const auto& decl : ast.declarations) {
            std::visit([this](const auto& d) { connect(d); }, decl);
        }
        return {std::move(builder_).freeze(), std::move(diagnostics_)};
    }

private:
    void element(std::string id, ElementKind kind, std::string name, SourceLocation loc,
                 std::map<std::string, std::string> attributes = {}, bool automated = false) {
        Element e;
        e.id = std::move(id);
        e.kind = kind;
        e.name = std::move(name);
        e.attributes = std::move(attributes);
        e.automated = automated;
        e.location = std::move(loc);
        record(builder_.add_element(std::move(e)));
    }

    void link(LinkKind kind, std::string src, std::string dst, SourceLocation loc) {
        Link l;
        l.kind = kind;
        l.src = std::move(src);
        l.dst = std::move(dst);
        l.location = std::move(loc);
        record(builder_.add_link(std::move(l)));
    }

    void record(std::optional<Diagnostic> diagnostic) {
        if (diagnostic) diagnostics_.push_back(std::move(*diagnostic));
    }

    void error(std::string code, std::vector<std::string> subjects, std::string message,
               SourceLocation loc) {
        Diagnostic d;
        d.code = std::move(code);
        d.severity = Severity::Error;
        d.subjects = std::move(subjects);
        d.message = std::move(message);
        d.location = std::move(loc);
        diagnostics_.push_back(std::move(d));
    }

    static std::string form_id(const ast::DialogDecl& dialog) { return dialog.id + "_form"; }

    // -- declaration pass ---------------------------------------------------

    void declare(const ast::ProcessDecl& decl) {
        element(decl.id, ElementKind::BusinessProcess, decl.name, decl.location);
        for (const auto& fn : decl.functions) declare(fn);
    }

    void declare(const ast::FunctionDecl& decl) {
        element(decl.id, ElementKind::BusinessFunction, decl.name, decl.location);
        for (const auto& fn : decl.functions) declare(fn);
        for (const auto& op : decl.operations) declare(op);
    }

    void declare(const ast::OperationDecl& decl) {
        std::map<std::string, std::string> attrs;
        if (decl.performer) attrs["performer"] = *decl.performer;
        element(decl.id, ElementKind::BusinessOperation, decl.name, decl.location,
                std::move(attrs), decl.automated);
        if (decl.service) {
            // A service has no name of its own; it carries its operation's.
            element(decl.service->id, ElementKind::OperationalService, decl.name,
                    decl.service->location);
            for (const auto& fn : decl.service->auto_fns) {
                element(fn.id, ElementKind::AutomatedFunction, fn.name, fn.location);
            }
        }
    }

    void declare(const ast::DialogDecl& decl) {
        std::map<std::string, std::string> attrs;
        if (decl.agent) attrs["agent"] = *decl.agent;
        element(decl.id, ElementKind::Dialog, decl.name, decl.location, std::move(attrs));
        if (decl.input) {
            element(decl.input->id, ElementKind::InformationObject, decl.input->name,
                    decl.input->location);
        }
        if (decl.output) {
            element(decl.output->id, ElementKind::InformationObject, decl.output->name,
                    decl.output->location);
        }
        if (decl.form) {
            element(form_id(decl), ElementKind::DialogForm, *decl.form, decl.form_location);
        }
        for (const auto& fn : decl.view_fns) {
            element(fn.id, ElementKind::ViewFunction, fn.name, fn.location,
                    {{"category", fn.category}});
        }
    }

    void declare(const ast::ComponentDecl& decl) {
        element(decl.id,
                decl.external ? ElementKind::ExternalSystem : ElementKind::FunctionalComponent,
                decl.name, decl.location);
        for (const auto& module : decl.modules) {
            element(module.id, ElementKind::SoftwareModule, module.name, module.location);
        }
    }

    void declare(const ast::ClassDecl& decl) {
        element(decl.id, ElementKind::EntityClass, decl.name, decl.location);
        for (const auto& method : decl.methods) {
            element(method.id, ElementKind::ClassMethod, method.name, method.location);
        }
    }

    void declare(const ast::NodeDecl& decl) {
        std::map<std::string, std::string> attrs;
        if (decl.requirements) attrs["requirements"] = *decl.requirements;
        element(decl.id, ElementKind::HardwareNode, decl.name, decl.location, std::move(attrs));
    }

    void declare(const ast::BindStmt&) {}

    // -- link pass ----------------------------------------------------------

    void connect(const ast::ProcessDecl& decl) {
        for (const auto& fn : decl.functions) {
            link(LinkKind::DECOMPOSES, decl.id, fn.id, fn.location);
            connect(fn);
        }
    }

    void connect(const ast::FunctionDecl& decl) {
        for (const auto& fn : decl.functions) {
            link(LinkKind::DECOMPOSES, decl.id, fn.id, fn.location);
            connect(fn);
        }
        for (const auto& op : decl.operations) {
            link(LinkKind::DECOMPOSES, decl.id, op.id, op.location);
            if (op.service) {
                link(LinkKind::HAS_SERVICE, op.id, op.service->id, op.service->location);
                for (const auto& autofn : op.service->auto_fns) {
                    link(LinkKind::CONTAINS_AUTOFN, op.service->id, autofn.id, autofn.location);
                }
            }
        }
    }

    void connect(const ast::DialogDecl& decl) {
        for (const auto& ref : decl.implements) {
            const Element* target = builder_.find(ref.id);
            if (!target) {
                error("E-REF-UNRES", {ref.id}, "unresolved reference to '" + ref.id + "'",
                      ref.location);
            } else if (target->kind == ElementKind::OperationalService) {
                link(LinkKind::SVC_DIALOG, ref.id, decl.id, ref.location);
            } else if (target->kind == ElementKind::AutomatedFunction) {
                link(LinkKind::IMPLEMENTS, ref.id, decl.id, ref.location);
            } else {
                error("E-LINK-META", {decl.id, ref.id},
                      "'" + ref.id + "' is a " + std::string(to_string(target->kind)) +
                          "; a dialog implements operational services or automated functions",
                      ref.location);
            }
        }
        if (decl.input) link(LinkKind::INPUT, decl.id, decl.input->id, decl.input->location);
        if (decl.output) link(LinkKind::OUTPUT, decl.id, decl.output->id, decl.output->location);
        if (decl.form) link(LinkKind::HAS_FORM, decl.id, form_id(decl), decl.form_location);
        for (const auto& fn : decl.view_fns) {
            link(LinkKind::HAS_VIEWFN, decl.id, fn.id, fn.location);
        }
    }

    void connect(const ast::ComponentDecl& decl) {
        for (const auto& module : decl.modules) {
            link(LinkKind::OWNS_MODULE, decl.id, module.id, module.location);
        }
    }

    void connect(const ast::ClassDecl& decl) {
        if (decl.hosted_by) {
            link(LinkKind::HOSTS_CLASS, decl.hosted_by->id, decl.id, decl.hosted_by->location);
        }
        for (const auto& method : decl.methods) {
            link(LinkKind::OWNS_METHOD, decl.id, method.id, method.location);
        }
    }

    void connect(const ast::NodeDecl& decl) {
        for (const auto& ref : decl.deploys) {
            link(LinkKind::DEPLOYS, decl.id, ref.id, ref.location);
        }
    }

    void connect(const ast::BindStmt& stmt) {
        const Element* src = builder_.find(stmt.src.id);
        if (!src) {
            error("E-REF-UNRES", {stmt.src.id},
                  "unresolved reference to '" + stmt.src.id + "'", stmt.src.location);
            return;
        }
        for (const auto& ref : stmt.dsts) {
            const Element* dst = builder_.find(ref.id);
            if (!dst) {
                error("E-REF-UNRES", {ref.id}, "unresolved reference to '" + ref.id + "'",
                      ref.location);
                continue;
            }
            if (src->kind == ElementKind::ViewFunction &&
                dst->kind == ElementKind::SoftwareModule) {
                link(LinkKind::VF_MODULE, stmt.src.id, ref.id, ref.location);
            } else if (src->kind == ElementKind::SoftwareModule &&
                       dst->kind == ElementKind::ClassMethod) {
                link(LinkKind::MOD_METHOD, stmt.src.id, ref.id, ref.location);
            } else {
                error("E-BIND-AMBIG", {stmt.src.id, ref.id},
                      "no legal link kind binds " + std::string(to_string(src->kind)) +
                          " '" + stmt.src.id + "' to " + std::string(to_string(dst->kind)) +
                          " '" + ref.id + "'",
                      ref.location);
            }
        }
    }

    ModelBuilder builder_;
    std::vector<Diagnostic> diagnostics_;
};

}  // namespace

std::pair<ArchitectureModel, std::vector<Diagnostic>> lower(const ast::ModelAst& ast) {
    return Lowering{}.run(ast);
}

}  // namespace archdl
