#include "hkl/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hkl {

Figure parseFigure(const std::string& s) {
  if (s == "tikz") return Figure::Tikz;
  if (s == "svg") return Figure::Svg;
  throw std::invalid_argument("unknown figure format: " + s);
}

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s == "-0" ? "0" : s;
}

struct Pt {
  double x, y;
};

// Minimal canvas writing either TikZ or SVG.  y grows upwards in user units.
class Canvas {
 public:
  Canvas(Figure f, double xmin, double xmax, double ymin, double ymax)
      : f_(f), xmin_(xmin), xmax_(xmax), ymin_(ymin), ymax_(ymax) {}

  void polyline(const std::vector<Pt>& pts, const std::string& style, bool closed = false) {
    if (f_ == Figure::Tikz) {
      os_ << "  \\draw" << (style.empty() ? "" : "[" + style + "]") << " ";
      for (std::size_t k = 0; k < pts.size(); ++k) os_ << (k ? " -- " : "") << "(" << num(pts[k].x) << "," << num(pts[k].y) << ")";
      os_ << (closed ? " -- cycle;\n" : ";\n");
    } else {
      os_ << "  <" << (closed ? "polygon" : "polyline") << " points=\"";
      for (std::size_t k = 0; k < pts.size(); ++k) os_ << (k ? " " : "") << sx(pts[k].x) << "," << sy(pts[k].y);
      os_ << "\" fill=\"none\" stroke=\"black\"" << svgStyle(style) << "/>\n";
    }
  }

  void text(Pt p, const std::string& s) {
    if (f_ == Figure::Tikz)
      os_ << "  \\node[font=\\scriptsize] at (" << num(p.x) << "," << num(p.y) << ") {$" << s << "$};\n";
    else
      os_ << "  <text x=\"" << sx(p.x) << "\" y=\"" << sy(p.y)
          << "\" font-size=\"10\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << s << "</text>\n";
  }

  void circle(Pt p, double r) {
    if (f_ == Figure::Tikz)
      os_ << "  \\draw (" << num(p.x) << "," << num(p.y) << ") circle (" << num(r) << ");\n";
    else
      os_ << "  <circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"" << num(r * scale)
          << "\" fill=\"none\" stroke=\"black\"/>\n";
  }

  // Half circle above the baseline from x0 to x1.
  void arc(double x0, double x1, double y, const std::string& style) {
    std::vector<Pt> pts;
    const double c = (x0 + x1) / 2, r = (x1 - x0) / 2;
    for (int k = 0; k <= 16; ++k) {
      const double th = M_PI * (1 - k / 16.0);
      pts.push_back({c + r * std::cos(th), y + r * std::sin(th)});
    }
    polyline(pts, style);
  }

  std::string str() const {
    std::ostringstream out;
    if (f_ == Figure::Tikz) {
      out << "\\begin{tikzpicture}[scale=0.5]\n" << os_.str() << "\\end{tikzpicture}\n";
    } else {
      const double w = (xmax_ - xmin_ + 2) * scale, h = (ymax_ - ymin_ + 2) * scale;
      out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h)
          << "\" viewBox=\"0 0 " << num(w) << " " << num(h) << "\">\n"
          << os_.str() << "</svg>\n";
    }
    return out.str();
  }

 private:
  static constexpr double scale = 20;
  std::string sx(double x) const { return num((x - xmin_ + 1) * scale); }
  std::string sy(double y) const { return num((ymax_ - y + 1) * scale); }
  static std::string svgStyle(const std::string& style) {
    std::string s;
    if (style.find("dashed") != std::string::npos) s += " stroke-dasharray=\"4 3\"";
    if (style.find("dotted") != std::string::npos) s += " stroke-dasharray=\"1 3\"";
    if (style.find("thick") != std::string::npos) s += " stroke-width=\"2\"";
    if (style.find("gray") != std::string::npos) s += " stroke-opacity=\"0.4\"";
    return s;
  }

  Figure f_;
  double xmin_, xmax_, ymin_, ymax_;
  std::ostringstream os_;
};

std::vector<Pt> diamond(const Box& b) {
  return {{double(b.i), b.j - 1.0}, {b.i + 1.0, double(b.j)}, {double(b.i), b.j + 1.0}, {b.i - 1.0, double(b.j)}};
}

// The staircase frame: the extremal paths and the axis.
void frame(Canvas& cv, int N) {
  cv.polyline({{0, 0}, {double(N), 0}}, "gray");
  cv.polyline({{0, 0}, {double(N), double(N)}}, "gray");
  cv.polyline({{0, 0}, {double(N), -double(N)}}, "gray");
}

std::vector<Pt> pathPoints(const BinaryString& a, Sign eps) {
  const auto h = heights(a, eps);
  std::vector<Pt> pts;
  for (std::size_t x = 0; x < h.size(); ++x) pts.push_back({double(x), double(h[x])});
  return pts;
}

}  // namespace

std::string renderDiagram(const BinaryString& a, Sign eps, Figure f) {
  validateString(a);
  const int N = static_cast<int>(a.size());
  Canvas cv(f, -1, N + 1, -N - 1, N + 1);
  frame(cv, N);
  for (const auto& b : stringToDiagram(a, eps).boxes) cv.polyline(diamond(b), "", true);
  if (N > 0) cv.polyline(pathPoints(a, eps), "thick");
  return cv.str();
}

std::string renderConfiguration(const BinaryString& alpha, const BinaryString& beta,
                                const StripConfiguration& c, Figure f) {
  const int N = static_cast<int>(beta.size());
  Canvas cv(f, -1, N + 1, -N - 1, N + 1);
  frame(cv, N);
  for (const auto& b : skewShape(alpha, beta, Sign::Plus)) cv.polyline(diamond(b), "gray", true);
  for (const auto& s : c.strips) {
    if (s.trace.size() == 1) {
      cv.circle({double(s.start().i), double(s.start().j)}, 0.15);
      continue;
    }
    std::vector<Pt> pts;
    for (const auto& b : s.trace) pts.push_back({double(b.i), double(b.j)});
    cv.polyline(pts, "thick");
  }
  cv.polyline(pathPoints(alpha, Sign::Plus), "");
  cv.polyline(pathPoints(beta, Sign::Plus), "");
  return cv.str();
}

std::string renderLinkPattern(const BinaryString& a, const CaseTag& kase, Figure f) {
  validateString(a);
  const int N = static_cast<int>(a.size());
  Canvas cv(f, 0, N + 1, -1, N / 2.0 + 2);
  cv.polyline({{0.5, 0}, {N + 0.5, 0}}, "gray");
  for (int k = 1; k <= N; ++k) cv.text({double(k), -0.6}, std::string(1, a[k - 1]));
  const double top = N / 2.0 + 1;
  auto vertical = [&](int k, const std::string& label) {
    cv.polyline({{double(k), 0}, {double(k), top}}, "");
    if (!label.empty()) cv.text({k + 0.3, top - 0.3}, label);
  };
  if (kase.isA()) {
    const auto lp = linkPatternA(a);
    for (const auto& [i, j] : lp.arcs) cv.arc(i, j, 0, "");
    for (int k : lp.oMarks) vertical(k, "o");
    for (int k : lp.eMarks) vertical(k, "e");
    for (int k : lp.circledOnes) cv.circle({double(k), 0}, 0.2);
  } else {
    const auto lp = linkPatternB(a, kase.m);
    for (const auto& [i, j] : lp.arcs) cv.arc(i, j, 0, "");
    for (const auto& [k, p] : lp.labeledVerticals) vertical(k, std::to_string(p));
    for (const auto& [i, j] : lp.dottedPairs) cv.arc(i, j, 0, "dotted");
    for (int k : lp.circledOnes) cv.circle({double(k), 0}, 0.2);
    for (int k : lp.circledTwos) {
      cv.circle({double(k), 0}, 0.2);
      cv.circle({double(k), 0}, 0.3);
    }
  }
  return cv.str();
}

std::string renderTree(const BinaryTree& tree, const Labelling* lab, Figure f) {
  const int n = static_cast<int>(tree.edges.size());
  std::vector<int> depth(n, 0);
  int maxDepth = 0;
  for (int e = 0; e < n; ++e) {
    const int p = tree.edges[e].parent;
    depth[e] = p < 0 ? 1 : depth[p] + 1;
    maxDepth = std::max(maxDepth, depth[e]);
  }
  const int N = static_cast<int>(tree.beta.size());
  Canvas cv(f, 0, N + 1, -maxDepth - 1, 1);
  // The lower end of an edge sits under its letter; the root is at the top left.
  auto bottom = [&](int e) { return Pt{double(tree.edges[e].pos), -double(depth[e])}; };
  auto topOf = [&](int e) {
    const int p = tree.edges[e].parent;
    return p < 0 ? Pt{0.5, 0} : bottom(p);
  };
  for (int e = 0; e < n; ++e) {
    const Pt a = topOf(e), b = bottom(e);
    cv.polyline({a, b}, "");
    std::string label = edgeMarkName(tree.edges[e].mark);
    if (lab) label = std::to_string((*lab)[e]) + (label.empty() ? "" : "," + label);
    if (!label.empty()) cv.text({(a.x + b.x) / 2 + 0.3, (a.y + b.y) / 2}, label);
  }
  for (const auto& [u, v] : tree.arrows) {
    const Pt a = bottom(u), b = bottom(v);
    cv.polyline({{a.x, a.y + 0.5}, {b.x, b.y + 0.5}}, "dashed,->");
  }
  return cv.str();
}

}  // namespace hkl
