#pragma once

// Line-based text formats. Blank lines and lines starting with '#' are
// ignored everywhere.
//
//   group <name> <order>          followed by <order> rows of indices,
//   semigroup <name> <size>       then an optional "labels l0 l1 ..." line
//
//   expansion <name> <size>       a group block, then <size> lines "({0,1}, 1)"
//
//   space <name> <n>              subbasis sets, one per line: "{0,2}", "0 2"
//                                 or "{}", up to the next header or the end
//   gamma <name> <size>           after a space block: <size> partial maps
//                                 "{0->1,1->0}", checked against the space
//
// Parse failures throw ParseError carrying the line number.

#include <filesystem>
#include <istream>
#include <memory>
#include <optional>
#include <string>

#include "brtk/algebra/group.hpp"
#include "brtk/algebra/semigroup.hpp"
#include "brtk/expansion/expansion.hpp"
#include "brtk/topology/gamma.hpp"

namespace brtk {

  enum class ObjectKind { group, semigroup, expansion, space, gamma };

  std::string_view kind_name(ObjectKind kind) noexcept;

  struct TextObject {
    ObjectKind                                   kind = ObjectKind::group;
    std::shared_ptr<FiniteGroup const>           group;      // group, expansion
    std::shared_ptr<FiniteSemigroup const>       semigroup;  // every algebraic kind
    std::shared_ptr<IntermediateExtension const> expansion;
    std::shared_ptr<FiniteTopology const>        space;  // space, gamma
    std::optional<Gamma>                         gamma;
  };

  std::string format_group(FiniteGroup const& G);
  std::string format_semigroup(FiniteSemigroup const& S);
  std::string format_expansion(IntermediateExtension const& T);
  std::string format_space(FiniteTopology const& t);
  std::string format_gamma(Gamma const& G);
  std::string format_object(TextObject const& object);

  TextObject parse_object(std::istream& in);
  TextObject parse_object(std::string const& text);
  // ParseError on unreadable files uses line 0.
  TextObject read_object(std::filesystem::path const& path);

}  // namespace brtk
