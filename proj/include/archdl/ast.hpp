#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "archdl/source_location.hpp"

namespace archdl::ast {

struct AutoFnDecl {
    std::string name;
    std::string id;
    SourceLocation location;
};

struct ServiceDecl {
    std::string id;
    std::vector<AutoFnDecl> auto_fns;
    SourceLocation location;
};

struct OperationDecl {
    std::string name;
    std::string id;
    bool automated = false;
    std::optional<std::string> performer;
    std::optional<ServiceDecl> service;
    SourceLocation location;
};

struct FunctionDecl {
    std::string name;
    std::string id;
    std::vector<FunctionDecl> functions;
    std::vector<OperationDecl> operations;
    SourceLocation location;
};

struct ProcessDecl {
    std::string name;
    std::string id;
    std::vector<FunctionDecl> functions;
    SourceLocation location;
};

struct Ref {
    std::string id;
    SourceLocation location;
};

struct IoObjectDecl {
    std::string name;
    std::string id;
    SourceLocation location;
};

struct ViewFnDecl {
    std::string name;
    std::string id;
    std::string category;  // precondition|io|control|error|postcondition
    SourceLocation location;
};

struct DialogDecl {
    std::string name;
    std::string id;
    std::vector<Ref> implements;
    std::optional<std::string> agent;  // user|system|external
    std::optional<IoObjectDecl> input;
    std::optional<IoObjectDecl> output;
    std::optional<std::string> form;
    SourceLocation form_location;
    std::vector<ViewFnDecl> view_fns;
    SourceLocation location;
};

struct ModuleDecl {
    std::string name;
    std::string id;
    SourceLocation location;
};

struct ComponentDecl {
    std::string name;
    std::string id;
    bool external = false;
    std::vector<ModuleDecl> modules;
    SourceLocation location;
};

struct MethodDecl {
    std::string name;
    std::string id;
    SourceLocation location;
};

struct ClassDecl {
    std::string name;
    std::string id;
    std::optional<Ref> hosted_by;
    std::vector<MethodDecl> methods;
    SourceLocation location;
};

struct NodeDecl {
    std::string name;
    std::string id;
    std::optional<std::string> requirements;
    std::vector<Ref> deploys;
    SourceLocation location;
};

struct BindStmt {
    Ref src;
    std::vector<Ref> dsts;
    SourceLocation location;
};

using Declaration =
    std::variant<ProcessDecl, DialogDecl, ComponentDecl, ClassDecl, NodeDecl, BindStmt>;

// Parsed ADL document, in declaration order. Comments are discarded.
struct ModelAst {
    std::vector<Declaration> declarations;
};

}  // namespace archdl::ast
