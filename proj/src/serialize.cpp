#include "archdl/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace archdl {

namespace {

std::string quoted(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

class Writer {
public:
    explicit Writer(const ArchitectureModel& model) : model_(model) {}

    std::string run() {
        for (const auto& id : model_.elements_of_kind(ElementKind::BusinessProcess)) {
            write_process(id);
        }
        for (const auto& id : model_.elements_of_kind(ElementKind::Dialog)) {
            write_dialog(id);
        }
        std::vector<std::string> components = model_.elements_of_kind(ElementKind::FunctionalComponent);
        for (const auto& id : model_.elements_of_kind(ElementKind::ExternalSystem)) {
            components.push_back(id);
        }
        std::sort(components.begin(), components.end());
        for (const auto& id : components) write_component(id);
        for (const auto& id : model_.elements_of_kind(ElementKind::EntityClass)) {
            write_class(id);
        }
        for (const auto& id : model_.elements_of_kind(ElementKind::HardwareNode)) {
            write_node(id);
        }
        write_binds(LinkKind::VF_MODULE, ElementKind::ViewFunction);
        write_binds(LinkKind::MOD_METHOD, ElementKind::SoftwareModule);
        return std::move(out_).str();
    }

private:
    void open_chunk() {
        if (!first_chunk_) out_ << "\n";
        first_chunk_ = false;
    }

    void line(int indent, const std::string& text) {
        for (int i = 0; i < indent; ++i) out_ << "  ";
        out_ << text << "\n";
    }

    std::string header(const std::string& keyword, const Element& e) {
        return keyword + " " + quoted(e.name) + " as " + e.id;
    }

    std::string attr(const Element& e, const std::string& key) const {
        auto it = e.attributes.find(key);
        return it == e.attributes.end() ? std::string() : it->second;
    }

    void write_process(const std::string& id) {
        open_chunk();
        line(0, header("process", model_.at(id)) + " {");
        for (const auto& child : model_.out_neighbors(id, LinkKind::DECOMPOSES)) {
            write_function(child, 1);
        }
        line(0, "}");
    }

    void write_function(const std::string& id, int indent) {
        line(indent, header("function", model_.at(id)) + " {");
        for (const auto& child : model_.out_neighbors(id, LinkKind::DECOMPOSES)) {
            if (model_.at(child).kind == ElementKind::BusinessFunction) {
                write_function(child, indent + 1);
            } else {
                write_operation(child, indent + 1);
            }
        }
        line(indent, "}");
    }

    void write_operation(const std::string& id, int indent) {
        const Element& op = model_.at(id);
        line(indent, header("operation", op) + (op.automated ? " automated" : "") + " {");
        if (!attr(op, "performer").empty()) {
            line(indent + 1, "performer " + quoted(attr(op, "performer")));
        }
        for (const auto& svc : model_.out_neighbors(id, LinkKind::HAS_SERVICE)) {
            line(indent + 1, "service as " + svc + " {");
            for (const auto& fn : model_.out_neighbors(svc, LinkKind::CONTAINS_AUTOFN)) {
                line(indent + 2, "auto_fn " + quoted(model_.at(fn).name) + " as " + fn);
            }
            line(indent + 1, "}");
        }
        line(indent, "}");
    }

    void write_dialog(const std::string& id) {
        open_chunk();
        const Element& dialog = model_.at(id);
        line(0, header("dialog", dialog) + " {");
        std::vector<std::string> implemented = model_.in_neighbors(id, LinkKind::SVC_DIALOG);
        for (const auto& fn : model_.in_neighbors(id, LinkKind::IMPLEMENTS)) {
            implemented.push_back(fn);
        }
        std::sort(implemented.begin(), implemented.end());
        if (!implemented.empty()) {
            std::string refs;
            for (const auto& ref : implemented) {
                if (!refs.empty()) refs += ", ";
                refs += ref;
            }
            line(1, "implements " + refs);
        }
        if (!attr(dialog, "agent").empty()) line(1, "agent " + attr(dialog, "agent"));
        for (const auto& obj : model_.out_neighbors(id, LinkKind::INPUT)) {
            line(1, "input resource " + quoted(model_.at(obj).name) + " as " + obj);
        }
        for (const auto& obj : model_.out_neighbors(id, LinkKind::OUTPUT)) {
            line(1, "output product " + quoted(model_.at(obj).name) + " as " + obj);
        }
        for (const auto& form : model_.out_neighbors(id, LinkKind::HAS_FORM)) {
            line(1, "form " + quoted(model_.at(form).name));
        }
        for (const auto& fn : model_.out_neighbors(id, LinkKind::HAS_VIEWFN)) {
            line(1, "view_fn " + quoted(model_.at(fn).name) + " as " + fn + " category " +
                        attr(model_.at(fn), "category"));
        }
        line(0, "}");
    }

    void write_component(const std::string& id) {
        open_chunk();
        const Element& component = model_.at(id);
        const char* keyword =
            component.kind == ElementKind::ExternalSystem ? "external_system" : "component";
        line(0, header(keyword, component) + " {");
        for (const auto& module : model_.out_neighbors(id, LinkKind::OWNS_MODULE)) {
            line(1, "module " + quoted(model_.at(module).name) + " as " + module);
        }
        line(0, "}");
    }

    void write_class(const std::string& id) {
        open_chunk();
        const Element& cls = model_.at(id);
        std::string head = header("class", cls);
        auto hosts = model_.in_neighbors(id, LinkKind::HOSTS_CLASS);
        if (!hosts.empty()) head += " hosted_by " + hosts.front();
        line(0, head + " {");
        for (const auto& method : model_.out_neighbors(id, LinkKind::OWNS_METHOD)) {
            line(1, "method " + quoted(model_.at(method).name) + " as " + method);
        }
        line(0, "}");
    }

    void write_node(const std::string& id) {
        open_chunk();
        const Element& node = model_.at(id);
        line(0, header("node", node) + " {");
        if (!attr(node, "requirements").empty()) {
            line(1, "requirements " + quoted(attr(node, "requirements")));
        }
        for (const auto& target : model_.out_neighbors(id, LinkKind::DEPLOYS)) {
            line(1, "deploys " + target);
        }
        line(0, "}");
    }

    void write_binds(LinkKind kind, ElementKind source_kind) {
        for (const auto& src : model_.elements_of_kind(source_kind)) {
            auto dsts = model_.out_neighbors(src, kind);
            if (dsts.empty()) continue;
            open_chunk();
            std::string refs;
            for (const auto& dst : dsts) {
                if (!refs.empty()) refs += ", ";
                refs += dst;
            }
            line(0, "bind " + src + " -> " + refs);
        }
    }

    const ArchitectureModel& model_;
    std::ostringstream out_;
    bool first_chunk_ = true;
};

}  // namespace

std::string serialize(const ArchitectureModel& model) {
    return Writer(model).run();
}

}  // namespace archdl
