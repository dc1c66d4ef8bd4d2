#pragma once

#include <array>
#include <string>
#include <vector>

#include "gpd/functor.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/partial_action.hpp"
#include "gpd/product.hpp"

namespace gpd {

// Line-oriented text formats.  Comments start with '#'; ids are arbitrary
// whitespace-free tokens.  Parsing is strict and reports line numbers;
// serialization emits the canonical form (objects first, identity products
// and inverse back-references dropped, declaration-order scans).

enum class DocKind { groupoid, paction, functor_map, autaction };

struct GpdDocument {
    DocKind kind;
    std::string name;

    // groupoid
    std::vector<std::string> objects;
    std::vector<ArrowDecl> arrows;
    std::vector<std::pair<std::string, std::string>> inverses;
    std::vector<std::array<std::string, 3>> comps;  // g h = k

    // paction
    std::string groupoid_ref;
    std::vector<std::string> points;
    std::vector<std::array<std::string, 3>> actions;  // g x = y

    // functor
    std::string source_ref, target_ref;
    std::vector<std::pair<std::string, std::string>> mappings;

    // autaction
    std::string group_ref;
    std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>> perms;
};

GpdDocument parse_document(const std::string& text);  // FormatError with line numbers
std::string serialize_document(const GpdDocument& doc);

GroupoidTable table_from_document(const GpdDocument& doc);
GpdDocument document_from_table(const GroupoidTable& t);

// Canonical text straight from in-memory objects.
std::string groupoid_text(const GroupoidTable& t);
std::string partial_action_text(const PartialActionTable& p, const std::string& groupoid_ref);
std::string functor_text(const GroupoidFunctor& f, const std::string& source_ref,
                         const std::string& target_ref);
std::string aut_action_text(const AutAction& a, const std::string& name,
                            const std::string& group_ref, const std::string& groupoid_ref);

// File loading; referenced files resolve relative to the referring file.
GroupoidTable load_groupoid(const std::string& path);

struct LoadedPaction {
    PartialActionTable action;
    std::string groupoid_ref;
};
LoadedPaction load_partial_action(const std::string& path);

struct LoadedFunctor {
    GroupoidFunctor functor;
    std::string source_ref, target_ref;
};
LoadedFunctor load_functor(const std::string& path);

struct LoadedAutAction {
    AutAction action;
    std::string name;
    std::string group_ref, groupoid_ref;
};
LoadedAutAction load_aut_action(const std::string& path);

std::string read_file(const std::string& path);              // FormatError if unreadable
void write_file(const std::string& path, const std::string& text);

}  // namespace gpd
