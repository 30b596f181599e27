#include "toggledyn/render.hpp"

#include <array>
#include <sstream>

#include "toggledyn/residue.hpp"

namespace toggledyn {

namespace {

char color_letter(int stone) { return static_cast<char>('a' + stone); }

constexpr std::array<const char*, 8> kPalette{"#d4a017", "#1f77b4", "#2ca02c", "#d62728",
                                              "#9467bd", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string render_ascii(const Timeline& tl, long long t) {
  const int n = tl.n();
  const int d = tl.d();
  const Labeling& s = tl.at(t);
  CoinsView view = tl.coins_at(t);
  std::vector<int> stone_at(n + 1, -1);
  for (int st = 0; st < d; ++st) stone_at[tl.stone_position(t, st)] = st;

  std::ostringstream out;
  out << "t=" << t << "\n";
  out << "cycle ";
  for (int p = 1; p <= n; ++p) {
    char stone = stone_at[p] >= 0 ? color_letter(stone_at[p]) : ' ';
    out << " " << p << ":[" << stone << " v" << s.vertex_of(p) + 1 << "]";
  }
  out << "\npath  ";
  std::vector<std::string> cell(n, " . ");
  for (int c = 0; c < d; ++c) {
    char letter = color_letter(view.stone_of_coin[c]);
    bool left = view.direction[c] == Direction::Left;
    cell[view.coin_vertex[c]] = left ? std::string("<") + letter + " " : std::string(" ") + letter + ">";
  }
  for (const auto& x : cell) out << x;
  out << "\nlabels";
  for (int v = 0; v < n; ++v) out << " " << s.label_of(v) << " ";
  out << "\n";
  return out.str();
}

std::string render_svg(const Timeline& tl, long long t_begin, long long t_end) {
  const int n = tl.n();
  const int d = tl.d();
  const int cell = 28;
  const int row_h = 3 * cell;
  const long long rows = t_end - t_begin + 1;
  const int width = (2 * n + 4) * cell;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << rows * row_h + cell << "\" font-family=\"monospace\" font-size=\"12\">\n";
  for (long long r = 0; r < rows; ++r) {
    long long t = t_begin + r;
    const Labeling& s = tl.at(t);
    CoinsView view = tl.coins_at(t);
    int y = static_cast<int>(r) * row_h + cell;
    out << "<text x=\"4\" y=\"" << y + 14 << "\">t=" << t << "</text>\n";
    // Cycle positions 1..n, left to right.
    for (int p = 1; p <= n; ++p) {
      int x = (p + 1) * cell;
      out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell - 4 << "\" height=\""
          << cell - 4 << "\" fill=\"none\" stroke=\"#999\"/>\n";
      for (int st = 0; st < d; ++st)
        if (tl.stone_position(t, st) == p)
          out << "<circle cx=\"" << x + cell / 2 - 2 << "\" cy=\"" << y + cell / 2 - 2 << "\" r=\""
              << cell / 2 - 4 << "\" fill=\"" << kPalette[st % kPalette.size()] << "\"/>\n";
      out << "<text x=\"" << x + 4 << "\" y=\"" << y + 16 << "\">v" << s.vertex_of(p) + 1 << "</text>\n";
    }
    int py = y + cell + 8;
    int px0 = (n + 3) * cell;
    out << "<line x1=\"" << px0 << "\" y1=\"" << py << "\" x2=\"" << px0 + (n - 1) * cell
        << "\" y2=\"" << py << "\" stroke=\"#333\"/>\n";
    for (int v = 0; v < n; ++v) {
      int x = px0 + v * cell;
      out << "<circle cx=\"" << x << "\" cy=\"" << py << "\" r=\"3\" fill=\"#333\"/>\n";
      out << "<text x=\"" << x - 4 << "\" y=\"" << py + 22 << "\" fill=\"#c00\">" << s.label_of(v)
          << "</text>\n";
    }
    for (int c = 0; c < d; ++c) {
      int x = px0 + view.coin_vertex[c] * cell;
      int st = view.stone_of_coin[c];
      out << "<circle cx=\"" << x << "\" cy=\"" << py - 10 << "\" r=\"8\" fill=\""
          << kPalette[st % kPalette.size()] << "\"/>\n";
      out << "<text x=\"" << x - 4 << "\" y=\"" << py - 22 << "\">"
          << (view.direction[c] == Direction::Left ? "&lt;" : "&gt;") << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace toggledyn
