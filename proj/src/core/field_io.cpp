#include "strainwig/field_io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>

#include "strainwig/errors.hpp"

namespace strainwig {

namespace {

template <class T>
void put_le(std::ostream& os, T value) {
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  os.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <class T>
T get_le(std::istream& is) {
  unsigned char bytes[sizeof(T)];
  if (!is.read(reinterpret_cast<char*>(bytes), sizeof(T)))
    throw ConfigError("truncated binary field file");
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  T value;
  std::memcpy(&value, bytes, sizeof(T));
  return value;
}

std::ofstream open_out(const std::string& path, bool binary) {
  std::ofstream os(path, binary ? std::ios::binary : std::ios::out);
  if (!os) throw ConfigError("cannot open '" + path + "' for writing");
  return os;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_field_csv(const WignerField& f, std::ostream& os) {
  os << "x,px,re_w11,im_w11,re_w12,im_w12,re_w21,im_w21,re_w22,im_w22,trace\n";
  std::string line;
  for (int i = 0; i < f.grid.nx; ++i) {
    for (int j = 0; j < f.grid.npx; ++j) {
      const std::size_t k = f.index(i, j);
      const double vals[11] = {f.grid.x(i),     f.grid.px(j),    f.w11[k].real(), f.w11[k].imag(),
                               f.w12[k].real(), f.w12[k].imag(), f.w21[k].real(), f.w21[k].imag(),
                               f.w22[k].real(), f.w22[k].imag(), f.trace(i, j)};
      line.clear();
      for (int c = 0; c < 11; ++c) {
        if (c) line += ',';
        line += format_double(vals[c]);
      }
      line += '\n';
      os << line;
    }
  }
}

void write_field_csv(const WignerField& f, const std::string& path) {
  auto os = open_out(path, false);
  write_field_csv(f, os);
}

WignerField read_field_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open '" + path + "'");
  std::string line;
  std::getline(is, line);
  std::vector<std::array<double, 11>> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::array<double, 11> r{};
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (int c = 0; c < 11; ++c) {
      const auto res = std::from_chars(p, end, r[c]);
      if (res.ec != std::errc{}) throw ConfigError("malformed CSV row in '" + path + "'");
      p = res.ptr;
      if (c < 10) {
        if (p == end || *p != ',') throw ConfigError("malformed CSV row in '" + path + "'");
        ++p;
      }
    }
    rows.push_back(r);
  }
  if (rows.size() < 4) throw ConfigError("CSV field too small in '" + path + "'");
  int npx = 1;
  while (npx < static_cast<int>(rows.size()) && rows[npx][0] == rows[0][0]) ++npx;
  if (rows.size() % static_cast<std::size_t>(npx) != 0)
    throw ConfigError("CSV field is not a rectangular grid");
  const int nx = static_cast<int>(rows.size() / npx);
  GridSpec g;
  g.nx = nx;
  g.npx = npx;
  g.x0 = rows.front()[0];
  g.px0 = rows.front()[1];
  g.dx = (rows.back()[0] - g.x0) / (nx - 1);
  g.dpx = (rows.back()[1] - g.px0) / (npx - 1);
  WignerField f(g);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& r = rows[k];
    f.w11[k] = {r[2], r[3]};
    f.w12[k] = {r[4], r[5]};
    f.w21[k] = {r[6], r[7]};
    f.w22[k] = {r[8], r[9]};
  }
  return f;
}

void write_field_binary(const WignerField& f, std::ostream& os) {
  os.write(kFieldMagic, 4);
  put_le<std::uint32_t>(os, kFieldVersion);
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(f.grid.nx));
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(f.grid.npx));
  put_le<double>(os, f.grid.x0);
  put_le<double>(os, f.grid.dx);
  put_le<double>(os, f.grid.px0);
  put_le<double>(os, f.grid.dpx);
  const std::size_t n = f.grid.size();
  for (std::size_t k = 0; k < n; ++k) put_le<double>(os, f.w11[k].real());
  for (std::size_t k = 0; k < n; ++k) put_le<double>(os, f.w12[k].real());
  for (std::size_t k = 0; k < n; ++k) put_le<double>(os, f.w12[k].imag());
  for (std::size_t k = 0; k < n; ++k) put_le<double>(os, f.w22[k].real());
  for (std::size_t k = 0; k < n; ++k) put_le<double>(os, (f.w11[k] + f.w22[k]).real());
}

void write_field_binary(const WignerField& f, const std::string& path) {
  auto os = open_out(path, true);
  write_field_binary(f, os);
}

WignerField read_field_binary(std::istream& is) {
  char magic[4];
  if (!is.read(magic, 4) || std::memcmp(magic, kFieldMagic, 4) != 0)
    throw ConfigError("not a WGNR field file");
  const auto version = get_le<std::uint32_t>(is);
  if (version != kFieldVersion)
    throw ConfigError("unsupported WGNR version " + std::to_string(version));
  GridSpec g;
  g.nx = static_cast<int>(get_le<std::uint32_t>(is));
  g.npx = static_cast<int>(get_le<std::uint32_t>(is));
  g.x0 = get_le<double>(is);
  g.dx = get_le<double>(is);
  g.px0 = get_le<double>(is);
  g.dpx = get_le<double>(is);
  WignerField f(g);
  const std::size_t n = g.size();
  std::vector<double> re12(n), im12(n);
  for (std::size_t k = 0; k < n; ++k) f.w11[k] = get_le<double>(is);
  for (std::size_t k = 0; k < n; ++k) re12[k] = get_le<double>(is);
  for (std::size_t k = 0; k < n; ++k) im12[k] = get_le<double>(is);
  for (std::size_t k = 0; k < n; ++k) f.w22[k] = get_le<double>(is);
  for (std::size_t k = 0; k < n; ++k) (void)get_le<double>(is);
  for (std::size_t k = 0; k < n; ++k) {
    f.w12[k] = {re12[k], im12[k]};
    f.w21[k] = std::conj(f.w12[k]);
  }
  return f;
}

WignerField read_field_binary(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ConfigError("cannot open '" + path + "'");
  return read_field_binary(is);
}

namespace {

// Blue - white - red, t in [-1, 1].
void diverging(double t, unsigned char* rgb) {
  t = std::clamp(t, -1.0, 1.0);
  const double lo[3] = {59, 76, 192};
  const double mid[3] = {247, 247, 247};
  const double hi[3] = {180, 4, 38};
  const double* end = t < 0.0 ? lo : hi;
  const double w = std::abs(t);
  for (int c = 0; c < 3; ++c)
    rgb[c] = static_cast<unsigned char>(std::lround(mid[c] + w * (end[c] - mid[c])));
}

}  // namespace

void write_trace_png(const WignerField& f, const std::string& path) {
  std::unique_ptr<FILE, int (*)(FILE*)> fp(std::fopen(path.c_str(), "wb"), &std::fclose);
  if (!fp) throw ConfigError("cannot open '" + path + "' for writing");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    throw ConfigError("libpng initialisation failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw ConfigError("libpng failed writing '" + path + "'");
  }
  png_init_io(png, fp.get());
  // x runs left to right, px bottom to top
  const int width = f.grid.nx;
  const int height = f.grid.npx;
  png_set_IHDR(png, info, width, height, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  double scale = 0.0;
  for (int i = 0; i < width; ++i)
    for (int j = 0; j < height; ++j) scale = std::max(scale, std::abs(f.trace(i, j)));
  if (scale == 0.0) scale = 1.0;

  std::vector<unsigned char> row(static_cast<std::size_t>(width) * 3);
  for (int r = 0; r < height; ++r) {
    const int j = height - 1 - r;
    for (int i = 0; i < width; ++i) diverging(f.trace(i, j) / scale, &row[3 * i]);
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace strainwig
