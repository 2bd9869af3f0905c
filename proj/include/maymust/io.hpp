#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "maymust/framework.hpp"
#include "maymust/semantics.hpp"

namespace maymust {

/// How an argument's tuple was declared in an .mmaf document.
struct DungDirective {};
using TupleSpec = std::variant<NuanceTuple, DungDirective, RatioSpec>;

struct InstanceDocument {
    struct Argument {
        std::string id;
        TupleSpec spec;
        std::size_t line = 0;
    };
    struct Attack {
        std::string source;
        std::string target;
        std::size_t line = 0;
    };
    std::vector<Argument> arguments;
    std::vector<Attack> attacks;
};

/// Grammar, one declaration per line, '#' starts a comment:
///   arg <id> <acc_may> <acc_must> <rej_may> <rej_must>
///   arg <id> dung
///   arg <id> ratio <am> <aM> <rm> <rM> [floor <k>]
///   att <src> <dst>
/// Throws SyntaxError for malformed lines.
InstanceDocument parse_document(std::string_view text);
/// Resolves directives against in-degrees. Throws DuplicateArgument,
/// UnknownArgumentInAttack, MayExceedsMust, FractionOrderViolation.
Framework resolve(const InstanceDocument& doc);
Framework parse_mmaf(std::string_view text);
Framework load_mmaf(const std::string& path);

std::string serialize_document(const InstanceDocument& doc);
/// Writes concrete tuples only.
std::string serialize_mmaf(const Framework& f);

enum class OutputFormat { Json, Text, Dot };

std::string render_json(const Framework& f, const SemanticsResult& r);
std::string render_text(const Framework& f, const SemanticsResult& r);
/// One digraph for the first labelling, or one per labelling with `all`.
std::string render_dot(const Framework& f, const SemanticsResult& r, bool all = false);
std::string render(const Framework& f, const SemanticsResult& r, OutputFormat fmt, bool all_graphs = false);

std::string format_labelling(const Framework& f, const Labelling& l);

}  // namespace maymust
