#include "brtk/io/text.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "brtk/error.hpp"

namespace brtk {

  std::string_view kind_name(ObjectKind kind) noexcept {
    switch (kind) {
      case ObjectKind::group: return "group";
      case ObjectKind::semigroup: return "semigroup";
      case ObjectKind::expansion: return "expansion";
      case ObjectKind::space: return "space";
      case ObjectKind::gamma: return "gamma";
    }
    return "?";
  }

  namespace {

    bool label_safe(std::vector<std::string> const& labels) {
      return std::all_of(labels.begin(), labels.end(), [](std::string const& l) {
        return !l.empty() && l.find_first_of(" \t\r\n#") == std::string::npos;
      });
    }

    void write_table(std::ostringstream& out, CayleyTable const& t) {
      for (Elem a = 0; a < t.size(); ++a) {
        for (Elem b = 0; b < t.size(); ++b) {
          out << (b == 0 ? "" : " ") << t(a, b);
        }
        out << '\n';
      }
    }

    void write_labels(std::ostringstream& out, std::vector<std::string> const& labels) {
      if (labels.empty() || !label_safe(labels)) {
        return;
      }
      out << "labels";
      for (auto const& l : labels) {
        out << ' ' << l;
      }
      out << '\n';
    }

    std::string trim(std::string_view s) {
      auto const b = s.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) {
        return {};
      }
      return std::string(s.substr(b, s.find_last_not_of(" \t\r") - b + 1));
    }

    std::vector<std::string> words(std::string const& line) {
      std::istringstream       in(line);
      std::vector<std::string> out;
      for (std::string w; in >> w;) {
        out.push_back(w);
      }
      return out;
    }

    class Lines {
     public:
      explicit Lines(std::istream& in) {
        std::string raw;
        for (std::size_t n = 1; std::getline(in, raw); ++n) {
          auto t = trim(raw);
          if (!t.empty() && t[0] != '#') {
            _lines.push_back({n, std::move(t)});
          }
        }
      }

      bool done() const noexcept {
        return _pos == _lines.size();
      }

      std::string const& peek() const {
        return _lines[_pos].text;
      }

      std::size_t line() const noexcept {
        return done() ? (_lines.empty() ? 1 : _lines.back().number + 1) : _lines[_pos].number;
      }

      std::string next(std::string_view expecting) {
        if (done()) {
          throw ParseError(line(), "unexpected end of input, expected " + std::string(expecting));
        }
        return _lines[_pos++].text;
      }

      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(line(), msg);
      }

      // the line just consumed
      std::size_t previous() const noexcept {
        return _lines[_pos - 1].number;
      }

     private:
      struct Line {
        std::size_t number;
        std::string text;
      };
      std::vector<Line> _lines;
      std::size_t       _pos = 0;
    };

    std::size_t parse_index(std::string_view w, std::size_t line, std::size_t bound, std::string_view what) {
      std::size_t v   = 0;
      auto const  res = std::from_chars(w.data(), w.data() + w.size(), v);
      if (res.ec != std::errc{} || res.ptr != w.data() + w.size()) {
        throw ParseError(line, "expected " + std::string(what) + ", got '" + std::string(w) + "'");
      }
      if (v >= bound) {
        throw ParseError(line, std::string(what) + " " + std::to_string(v) + " out of range (must be < "
                                   + std::to_string(bound) + ")");
      }
      return v;
    }

    struct Header {
      std::string name;
      std::size_t size = 0;
      std::size_t line = 0;
    };

    Header header(Lines& lines, std::string_view keyword, std::size_t max_size) {
      auto const w = words(lines.next(keyword));
      auto const n = lines.previous();
      if (w.empty() || w[0] != keyword) {
        throw ParseError(n, "expected '" + std::string(keyword) + " <name> <size>'");
      }
      if (w.size() != 3) {
        throw ParseError(n, "'" + std::string(keyword) + "' header needs a name and a size");
      }
      auto const size = parse_index(w[2], n, max_size + 1, "size");
      if (size == 0) {
        throw ParseError(n, "size must be positive");
      }
      return {w[1], size, n};
    }

    std::pair<CayleyTable, std::vector<std::string>> table_block(Lines& lines, std::size_t n) {
      CayleyTable t(n);
      for (Elem a = 0; a < n; ++a) {
        auto const w    = words(lines.next("table row"));
        auto const line = lines.previous();
        if (w.size() != n) {
          throw ParseError(line, "row " + std::to_string(a) + " has " + std::to_string(w.size())
                                     + " entries, expected " + std::to_string(n));
        }
        for (Elem b = 0; b < n; ++b) {
          t.at(a, b) = static_cast<Elem>(parse_index(w[b], line, n, "element index"));
        }
      }
      std::vector<std::string> labels;
      if (!lines.done() && lines.peek().starts_with("labels")) {
        auto w = words(lines.next("labels"));
        if (w.size() != n + 1) {
          throw ParseError(lines.previous(), "expected " + std::to_string(n) + " labels");
        }
        labels.assign(w.begin() + 1, w.end());
      }
      return {std::move(t), std::move(labels)};
    }

    template <typename Build>
    auto validated(std::size_t line, Build&& build) {
      try {
        return build();
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(line, e.what());
      }
    }

    std::shared_ptr<FiniteGroup const> group_block(Lines& lines) {
      auto h             = header(lines, "group", 4096);
      auto [table, lbls] = table_block(lines, h.size);
      return validated(h.line, [&] {
        return std::make_shared<FiniteGroup const>(FiniteGroup::from_table(h.name, std::move(table), std::move(lbls)));
      });
    }

    // "{0,2}", "{}", or "0 2"
    Bitset parse_set(std::string const& text, std::size_t line, std::size_t n) {
      std::string body = text;
      if (body.front() == '{') {
        if (body.back() != '}') {
          throw ParseError(line, "unterminated set '" + text + "'");
        }
        body = body.substr(1, body.size() - 2);
        std::replace(body.begin(), body.end(), ',', ' ');
      }
      Bitset out(n);
      for (auto const& w : words(body)) {
        out.set(parse_index(w, line, n, "point"));
      }
      return out;
    }

    ExpansionPair parse_pair(std::string const& text, std::size_t line, std::size_t order) {
      std::string s;
      std::copy_if(text.begin(), text.end(), std::back_inserter(s), [](char c) { return c != ' ' && c != '\t'; });
      auto const close = s.find('}');
      if (!s.starts_with("({") || close == std::string::npos || s.size() < close + 4 || s[close + 1] != ','
          || s.back() != ')') {
        throw ParseError(line, "expected '({i,j,...}, g)', got '" + text + "'");
      }
      auto const  members = parse_set(s.substr(1, close), line, order);
      GroupSubset A       = 0;
      members.for_each([&](std::size_t x) { A |= singleton(static_cast<Elem>(x)); });
      if (A == 0) {
        throw ParseError(line, "the subset of a pair must be nonempty");
      }
      auto const g = parse_index(s.substr(close + 2, s.size() - close - 3), line, order, "group element");
      return {A, static_cast<Elem>(g)};
    }

    PartialBijection parse_map(std::string const& text, std::size_t line, std::size_t n) {
      if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
        throw ParseError(line, "expected a partial map '{x->y,...}', got '" + text + "'");
      }
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      std::string                                      body = text.substr(1, text.size() - 2);
      std::replace(body.begin(), body.end(), ',', ' ');
      for (auto const& w : words(body)) {
        auto const arrow = w.find("->");
        if (arrow == std::string::npos) {
          throw ParseError(line, "expected 'x->y', got '" + w + "'");
        }
        pairs.emplace_back(parse_index(w.substr(0, arrow), line, n, "point"),
                           parse_index(w.substr(arrow + 2), line, n, "point"));
      }
      return validated(line, [&] { return PartialBijection::from_pairs(n, pairs); });
    }

    bool is_header(std::string const& line) {
      return !line.empty() && std::isalpha(static_cast<unsigned char>(line[0]));
    }

    std::shared_ptr<FiniteTopology const> space_block(Lines& lines) {
      auto                h = header(lines, "space", 16);
      std::vector<Bitset> subbasis;
      while (!lines.done() && !is_header(lines.peek())) {
        auto const text = lines.next("subbasis set");
        subbasis.push_back(parse_set(text, lines.previous(), h.size));
      }
      return std::make_shared<FiniteTopology const>(generate_topology(h.size, subbasis, h.name));
    }

  }  // namespace

  std::string format_group(FiniteGroup const& G) {
    std::ostringstream out;
    out << "group " << G.name() << ' ' << G.order() << '\n';
    write_table(out, G.table());
    write_labels(out, G.labels());
    return out.str();
  }

  std::string format_semigroup(FiniteSemigroup const& S) {
    std::ostringstream out;
    out << "semigroup " << S.name() << ' ' << S.size() << '\n';
    write_table(out, S.table());
    write_labels(out, S.labels());
    return out.str();
  }

  std::string format_expansion(IntermediateExtension const& T) {
    std::ostringstream out;
    out << "expansion " << T.name() << ' ' << T.size() << '\n' << format_group(T.group());
    for (auto const& p : T.elements()) {
      out << to_string(p) << '\n';
    }
    return out.str();
  }

  std::string format_space(FiniteTopology const& t) {
    std::ostringstream out;
    out << "space " << (t.name().empty() ? "X" : t.name()) << ' ' << t.size() << '\n';
    std::vector<Bitset> U(t.neighbourhoods());
    std::sort(U.begin(), U.end());
    U.erase(std::unique(U.begin(), U.end()), U.end());
    for (auto const& V : U) {
      out << V.to_string() << '\n';
    }
    return out.str();
  }

  std::string format_gamma(Gamma const& G) {
    std::ostringstream out;
    out << format_space(*G.space) << "gamma " << G.semigroup().name() << ' ' << G.size() << '\n';
    for (Elem i = 0; i < G.size(); ++i) {
      out << G.at(i).to_string() << '\n';
    }
    return out.str();
  }

  std::string format_object(TextObject const& o) {
    switch (o.kind) {
      case ObjectKind::group: return format_group(*o.group);
      case ObjectKind::semigroup: return format_semigroup(*o.semigroup);
      case ObjectKind::expansion: return format_expansion(*o.expansion);
      case ObjectKind::space: return format_space(*o.space);
      case ObjectKind::gamma: return format_gamma(*o.gamma);
    }
    return {};
  }

  TextObject parse_object(std::istream& in) {
    Lines lines(in);
    if (lines.done()) {
      lines.fail("empty input");
    }
    auto const keyword = words(lines.peek()).front();
    TextObject o;
    if (keyword == "group") {
      o.kind      = ObjectKind::group;
      o.group     = group_block(lines);
      o.semigroup = std::make_shared<FiniteSemigroup const>(
          FiniteSemigroup::from_table(o.group->table(), o.group->labels(), o.group->name()));
    } else if (keyword == "semigroup") {
      auto h             = header(lines, "semigroup", 4096);
      auto [table, lbls] = table_block(lines, h.size);
      o.kind             = ObjectKind::semigroup;
      o.semigroup        = validated(h.line, [&] {
        return std::make_shared<FiniteSemigroup const>(
            FiniteSemigroup::from_table(std::move(table), std::move(lbls), h.name));
      });
    } else if (keyword == "expansion") {
      auto h  = header(lines, "expansion", 1u << 16);
      o.kind  = ObjectKind::expansion;
      o.group = group_block(lines);
      std::vector<ExpansionPair> elems;
      for (std::size_t i = 0; i < h.size; ++i) {
        auto const text = lines.next("expansion pair");
        elems.push_back(parse_pair(text, lines.previous(), o.group->order()));
      }
      o.expansion = validated(h.line, [&] {
        return std::make_shared<IntermediateExtension const>(
            IntermediateExtension::from_elements(o.group, std::move(elems), h.name));
      });
      o.semigroup = o.expansion->semigroup_ptr();
    } else if (keyword == "space") {
      o.kind  = ObjectKind::space;
      o.space = space_block(lines);
      if (!lines.done() && words(lines.peek()).front() == "gamma") {
        auto h  = header(lines, "gamma", 1u << 12);
        o.kind  = ObjectKind::gamma;
        o.gamma = validated(h.line, [&] { return gamma(o.space); });
        std::vector<PartialBijection> listed;
        for (std::size_t i = 0; i < h.size; ++i) {
          auto const text = lines.next("partial map");
          auto       f    = parse_map(text, lines.previous(), o.space->size());
          if (!o.gamma->elements->index_of(f)) {
            throw ParseError(lines.previous(), f.to_string() + " is not a partial homeomorphism between opens");
          }
          listed.push_back(std::move(f));
        }
        std::sort(listed.begin(), listed.end());
        if (std::adjacent_find(listed.begin(), listed.end()) != listed.end() || listed.size() != o.gamma->size()) {
          throw ParseError(h.line, "listing has " + std::to_string(h.size) + " distinct maps, Gamma has "
                                       + std::to_string(o.gamma->size()));
        }
        o.semigroup = o.gamma->elements->semigroup;
      }
    } else {
      lines.fail("unknown object '" + keyword + "'");
    }
    if (!lines.done()) {
      lines.fail("trailing content '" + lines.peek() + "'");
    }
    return o;
  }

  TextObject parse_object(std::string const& text) {
    std::istringstream in(text);
    return parse_object(in);
  }

  TextObject read_object(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError(0, "cannot read '" + path.string() + "'");
    }
    return parse_object(in);
  }

}  // namespace brtk
