#include "luban/materials.hpp"

#include <cctype>

namespace luban {

const MaterialTable& MaterialTable::defaults() {
  static const MaterialTable table = [] {
    MaterialTable t;
    t.set("plank", {{184, 148, 95}, RenderClass::opaque});
    t.set("stone", {{125, 125, 125}, RenderClass::opaque});
    t.set("glass", {{168, 208, 228}, RenderClass::transparent});
    t.set("ladder", {{152, 110, 58}, RenderClass::climbable});
    t.set("water", {{42, 88, 196}, RenderClass::liquid});
    t.set("dirt", {{134, 96, 67}, RenderClass::opaque});
    t.set("air", {{0, 0, 0}, RenderClass::transparent});
    return t;
  }();
  return table;
}

bool MaterialTable::known(std::string_view label) const {
  return entries_.find(label) != entries_.end();
}

const MaterialInfo& MaterialTable::info(std::string_view label) const {
  auto it = entries_.find(label);
  return it == entries_.end() ? unknown_ : it->second;
}

std::string MaterialTable::from_annotation(std::string_view anno) const {
  std::string word;
  auto check_word = [&]() -> const std::string* {
    if (word.empty()) return nullptr;
    auto it = entries_.find(word);
    if (it == entries_.end() && word.size() > 1 && word.back() == 's') {
      it = entries_.find(std::string_view(word).substr(0, word.size() - 1));
    }
    return it == entries_.end() ? nullptr : &it->first;
  };
  for (char c : anno) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else {
      if (const std::string* hit = check_word()) return *hit;
      word.clear();
    }
  }
  if (const std::string* hit = check_word()) return *hit;
  return "stone";
}

void MaterialTable::set(std::string label, MaterialInfo info) {
  entries_[std::move(label)] = info;
}

}  // namespace luban
