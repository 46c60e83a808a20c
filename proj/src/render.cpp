#include <holdring/error.hpp>
#include <holdring/render.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace holdring {

    namespace {

        struct Pair64 {
            std::int64_t a;
            std::int64_t b;
            friend bool operator<(const Pair64& x, const Pair64& y) { return x.a < y.a || (x.a == y.a && x.b < y.b); }
            friend bool operator==(const Pair64&, const Pair64&) = default;
        };

        std::uint64_t checked_power(std::uint64_t base, std::size_t exponent) {
            std::uint64_t result = 1;
            for (std::size_t i = 0; i < exponent; ++i) {
                if (result > kMaxTilePoints / base) {
                    return kMaxTilePoints + 1;
                }
                result *= base;
            }
            return result;
        }

        std::array<std::uint8_t, 3> palette(std::uint8_t level) {
            static constexpr std::array<std::array<std::uint8_t, 3>, 12> colours{{
                {31, 119, 180},
                {255, 127, 14},
                {44, 160, 44},
                {214, 39, 40},
                {148, 103, 189},
                {140, 86, 75},
                {227, 119, 194},
                {127, 127, 127},
                {188, 189, 34},
                {23, 190, 207},
                {0, 0, 128},
                {128, 0, 0},
            }};
            if (level == 0) {
                return {255, 255, 255};
            }
            return colours[static_cast<std::size_t>(level - 1) % colours.size()];
        }

        std::string hex_colour(std::uint8_t level) {
            const auto c = palette(level);
            char buf[8];
            std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c[0], c[1], c[2]);
            return buf;
        }

        TileImage blank(const Viewport& view, std::size_t width, std::size_t height) {
            if (width == 0 || height == 0 || width > kMaxRasterSide || height > kMaxRasterSide) {
                throw std::invalid_argument("rasterize: resolution must be within 1..8192 per side");
            }
            if (!(view.re_max > view.re_min) || !(view.im_max > view.im_min)) {
                throw std::invalid_argument("rasterize: empty viewport");
            }
            TileImage image;
            image.width = width;
            image.height = height;
            image.viewport = view;
            image.pixels.assign(width * height, 0);
            return image;
        }

        // Continuous pixel coordinates: x grows with Re, y grows downward.
        std::complex<double> to_pixel_space(const TileImage& image, std::complex<double> z) {
            const auto& v = image.viewport;
            const double x = (z.real() - v.re_min) / (v.re_max - v.re_min) * static_cast<double>(image.width);
            const double y = (v.im_max - z.imag()) / (v.im_max - v.im_min) * static_cast<double>(image.height);
            return {x, y};
        }

        std::complex<double> to_pixel_space(const Viewport& v, std::size_t w, std::size_t h, std::complex<double> z) {
            const double x = (z.real() - v.re_min) / (v.re_max - v.re_min) * static_cast<double>(w);
            const double y = (v.im_max - z.imag()) / (v.im_max - v.im_min) * static_cast<double>(h);
            return {x, y};
        }

        std::string fmt(double x) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3f", x);
            return buf;
        }

        std::string svg_header(std::size_t w, std::size_t h) {
            return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) + "\" height=\"" +
                   std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + ' ' + std::to_string(h) +
                   "\">\n<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
        }

        Viewport widen_to_aspect(double re_lo, double re_hi, double im_lo, double im_hi, std::size_t width,
                                 std::size_t height, double margin) {
            double w = re_hi - re_lo;
            double h = im_hi - im_lo;
            if (w <= 0.0) {
                w = 1.0;
            }
            if (h <= 0.0) {
                h = 1.0;
            }
            const double cx = (re_lo + re_hi) / 2.0;
            const double cy = (im_lo + im_hi) / 2.0;
            w *= 1.0 + 2.0 * margin;
            h *= 1.0 + 2.0 * margin;
            const double aspect = static_cast<double>(width) / static_cast<double>(height);
            if (w / h < aspect) {
                w = h * aspect;
            } else {
                h = w / aspect;
            }
            return {cx - w / 2.0, cx + w / 2.0, cy - h / 2.0, cy + h / 2.0};
        }

    } // namespace

    TileCloud tile_points(const SystemBinding& binding, std::size_t d) {
        const auto& ring = binding.ring();
        const auto& order = ring.order();
        const int n = ring.digit_order();
        const auto q = static_cast<std::uint64_t>(n + 1);
        const std::uint64_t total = checked_power(q, d + 1);
        if (total > kMaxTilePoints) {
            throw TooLarge("tile_points: (n+1)^(d+1) exceeds 2^24");
        }

        // contributions[j][v] = iota(digit v) * X^j exactly.
        std::vector<std::vector<Pair64>> contributions(d + 1);
        Integer worst = 0;
        QuadraticInt power(1, 0);
        for (std::size_t j = 0; j <= d; ++j) {
            Integer level_worst = 0;
            contributions[j].push_back({0, 0});
            for (int e = 0; e < n; ++e) {
                const auto c = order.mul(ring.iota(Digit::root(e, n)), power);
                level_worst = std::max(level_worst, Integer(std::max(abs(c.a), abs(c.b))));
                if (abs(c.a) > Integer(std::numeric_limits<std::int64_t>::max() / 4) ||
                    abs(c.b) > Integer(std::numeric_limits<std::int64_t>::max() / 4)) {
                    throw TooLarge("tile_points: coordinates exceed 62 bits");
                }
                contributions[j].push_back({static_cast<std::int64_t>(c.a), static_cast<std::int64_t>(c.b)});
            }
            worst += level_worst;
            power = order.mul(power, ring.generator());
        }
        if (worst > (Integer(1) << 62)) {
            throw TooLarge("tile_points: coordinates exceed 62 bits");
        }

        std::vector<Pair64> values(static_cast<std::size_t>(total));
        std::vector<std::uint8_t> degree(static_cast<std::size_t>(total), 0);
        values[0] = {0, 0};
        std::size_t filled = 1;
        for (std::size_t j = 0; j <= d; ++j) {
            for (std::uint64_t v = 1; v < q; ++v) {
                const auto& c = contributions[j][v];
                for (std::size_t r = 0; r < filled; ++r) {
                    values[v * filled + r] = {values[r].a + c.a, values[r].b + c.b};
                    degree[v * filled + r] = static_cast<std::uint8_t>(j);
                }
            }
            filled *= static_cast<std::size_t>(q);
        }

        TileCloud cloud;
        cloud.system = binding.name();
        cloud.degree = d;
        cloud.string_degree = std::move(degree);
        cloud.exact.reserve(values.size());
        cloud.points.reserve(values.size());
        for (const auto& v : values) {
            QuadraticInt z(v.a, v.b);
            cloud.points.push_back(order.to_complex(z));
            cloud.exact.push_back(std::move(z));
        }
        auto sorted = values;
        std::sort(sorted.begin(), sorted.end());
        cloud.collisions = static_cast<std::size_t>(sorted.end() - std::unique(sorted.begin(), sorted.end()));
        return cloud;
    }

    Quad fundamental_domain(const QuadraticOrder& order) {
        const std::complex<double> w = order.degenerate() ? std::complex<double>(0.0, 1.0) : order.w();
        return {std::complex<double>(0.0, 0.0), std::complex<double>(1.0, 0.0), 1.0 + w, w};
    }

    CellSet tile_cells(const TileCloud& cloud, const SystemBinding& binding, bool rescale) {
        const auto& order = binding.ring().order();
        const Quad f = fundamental_domain(order);
        std::complex<double> scale = 1.0;
        if (rescale) {
            scale = std::pow(order.to_complex(binding.ring().generator()), -static_cast<double>(cloud.degree));
        }
        CellSet set;
        set.system = cloud.system;
        set.degree = cloud.degree;
        set.string_degree = cloud.string_degree;
        set.cells.reserve(cloud.points.size());
        for (const auto& p : cloud.points) {
            set.cells.push_back({(p + f[0]) * scale, (p + f[1]) * scale, (p + f[2]) * scale, (p + f[3]) * scale});
        }
        return set;
    }

    CellSet tile_cells(const SystemBinding& binding, std::size_t d, bool rescale) {
        return tile_cells(tile_points(binding, d), binding, rescale);
    }

    Viewport fit_viewport(const std::vector<std::complex<double>>& points, std::size_t width, std::size_t height,
                          double margin) {
        if (points.empty()) {
            return widen_to_aspect(-1.0, 1.0, -1.0, 1.0, width, height, 0.0);
        }
        double re_lo = points.front().real(), re_hi = re_lo;
        double im_lo = points.front().imag(), im_hi = im_lo;
        for (const auto& p : points) {
            re_lo = std::min(re_lo, p.real());
            re_hi = std::max(re_hi, p.real());
            im_lo = std::min(im_lo, p.imag());
            im_hi = std::max(im_hi, p.imag());
        }
        return widen_to_aspect(re_lo, re_hi, im_lo, im_hi, width, height, margin);
    }

    Viewport fit_viewport(const CellSet& cells, std::size_t width, std::size_t height, double margin) {
        std::vector<std::complex<double>> corners;
        corners.reserve(cells.cells.size() * 4);
        for (const auto& c : cells.cells) {
            corners.insert(corners.end(), c.begin(), c.end());
        }
        return fit_viewport(corners, width, height, margin);
    }

    std::size_t TileImage::occupied() const {
        return static_cast<std::size_t>(std::count_if(pixels.begin(), pixels.end(), [](std::uint8_t p) { return p != 0; }));
    }

    std::optional<std::array<std::size_t, 2>> pixel_of(const TileImage& image, std::complex<double> z) {
        const auto p = to_pixel_space(image, z);
        if (!(p.real() >= 0.0) || !(p.imag() >= 0.0)) {
            return std::nullopt;
        }
        const auto x = static_cast<std::size_t>(std::floor(p.real()));
        const auto y = static_cast<std::size_t>(std::floor(p.imag()));
        if (x >= image.width || y >= image.height) {
            return std::nullopt;
        }
        return std::array<std::size_t, 2>{x, y};
    }

    TileImage rasterize(const TileCloud& cloud, const Viewport& view, std::size_t width, std::size_t height) {
        TileImage image = blank(view, width, height);
        image.system = cloud.system;
        image.degree = cloud.degree;
        image.point_count = cloud.points.size();
        for (std::size_t k = 0; k < cloud.points.size(); ++k) {
            const auto px = pixel_of(image, cloud.points[k]);
            if (!px) {
                ++image.clipped;
                continue;
            }
            auto& cell = image.pixels[(*px)[1] * width + (*px)[0]];
            const auto level = static_cast<std::uint8_t>(std::min<unsigned>(cloud.string_degree[k] + 1u, 255u));
            cell = std::max(cell, level);
        }
        return image;
    }

    TileImage rasterize(const CellSet& cells, const Viewport& view, std::size_t width, std::size_t height) {
        TileImage image = blank(view, width, height);
        image.system = cells.system;
        image.degree = cells.degree;
        image.point_count = cells.cells.size();
        for (std::size_t k = 0; k < cells.cells.size(); ++k) {
            std::array<std::complex<double>, 4> c{};
            for (std::size_t i = 0; i < 4; ++i) {
                c[i] = to_pixel_space(image, cells.cells[k][i]);
            }
            const std::complex<double> u = c[1] - c[0];
            const std::complex<double> v = c[3] - c[0];
            const double det = u.real() * v.imag() - u.imag() * v.real();
            if (det == 0.0) {
                continue;
            }
            double x_lo = c[0].real(), x_hi = x_lo, y_lo = c[0].imag(), y_hi = y_lo;
            for (const auto& p : c) {
                x_lo = std::min(x_lo, p.real());
                x_hi = std::max(x_hi, p.real());
                y_lo = std::min(y_lo, p.imag());
                y_hi = std::max(y_hi, p.imag());
            }
            if (x_hi < 0.0 || y_hi < 0.0 || x_lo >= static_cast<double>(width) || y_lo >= static_cast<double>(height)) {
                ++image.clipped;
                continue;
            }
            const auto ix_lo = static_cast<std::size_t>(std::max(0.0, std::floor(x_lo - 0.5)));
            const auto iy_lo = static_cast<std::size_t>(std::max(0.0, std::floor(y_lo - 0.5)));
            const auto ix_hi = std::min(width - 1, static_cast<std::size_t>(std::max(0.0, std::ceil(x_hi))));
            const auto iy_hi = std::min(height - 1, static_cast<std::size_t>(std::max(0.0, std::ceil(y_hi))));
            const auto level = static_cast<std::uint8_t>(std::min<unsigned>(cells.string_degree[k] + 1u, 255u));
            for (std::size_t y = iy_lo; y <= iy_hi; ++y) {
                for (std::size_t x = ix_lo; x <= ix_hi; ++x) {
                    const std::complex<double> r =
                        std::complex<double>(static_cast<double>(x) + 0.5, static_cast<double>(y) + 0.5) - c[0];
                    const double s = (r.real() * v.imag() - r.imag() * v.real()) / det;
                    const double t = (u.real() * r.imag() - u.imag() * r.real()) / det;
                    if (s >= 0.0 && s < 1.0 && t >= 0.0 && t < 1.0) {
                        auto& pixel = image.pixels[y * width + x];
                        pixel = std::max(pixel, level);
                    }
                }
            }
        }
        return image;
    }

    double symmetric_difference_fraction(const TileImage& a, const TileImage& b) {
        if (a.width != b.width || a.height != b.height) {
            throw std::invalid_argument("symmetric_difference_fraction: image sizes differ");
        }
        std::size_t either = 0;
        std::size_t exactly_one = 0;
        for (std::size_t i = 0; i < a.pixels.size(); ++i) {
            const bool x = a.pixels[i] != 0;
            const bool y = b.pixels[i] != 0;
            either += (x || y) ? 1 : 0;
            exactly_one += (x != y) ? 1 : 0;
        }
        return either == 0 ? 0.0 : static_cast<double>(exactly_one) / static_cast<double>(either);
    }

    std::string encode_ppm(const TileImage& image) {
        std::string out = "P6\n" + std::to_string(image.width) + ' ' + std::to_string(image.height) + "\n255\n";
        out.reserve(out.size() + image.pixels.size() * 3);
        for (const auto p : image.pixels) {
            const auto c = palette(p);
            out.append(reinterpret_cast<const char*>(c.data()), 3);
        }
        return out;
    }

    void write_text_file(const std::string& contents, const std::filesystem::path& path) {
        std::ofstream file(path, std::ios::binary | std::ios::trunc);
        if (!file) {
            throw IoError("cannot open " + path.string() + " for writing");
        }
        file.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!file) {
            throw IoError("short write to " + path.string());
        }
    }

    void write_ppm(const TileImage& image, const std::filesystem::path& path) {
        write_text_file(encode_ppm(image), path);
    }

    std::string encode_svg(const TileCloud& cloud, const Viewport& view, std::size_t width, std::size_t height) {
        std::string out = svg_header(width, height);
        for (std::size_t k = 0; k < cloud.points.size(); ++k) {
            const auto p = to_pixel_space(view, width, height, cloud.points[k]);
            if (p.real() < 0.0 || p.imag() < 0.0 || p.real() > static_cast<double>(width) ||
                p.imag() > static_cast<double>(height)) {
                continue;
            }
            out += "<circle cx=\"" + fmt(p.real()) + "\" cy=\"" + fmt(p.imag()) + "\" r=\"1\" fill=\"" +
                   hex_colour(static_cast<std::uint8_t>(cloud.string_degree[k] + 1)) + "\"/>\n";
        }
        out += "</svg>\n";
        return out;
    }

    std::string encode_svg(const CellSet& cells, const Viewport& view, std::size_t width, std::size_t height) {
        std::string out = svg_header(width, height);
        for (std::size_t k = 0; k < cells.cells.size(); ++k) {
            out += "<polygon points=\"";
            for (std::size_t i = 0; i < 4; ++i) {
                const auto p = to_pixel_space(view, width, height, cells.cells[k][i]);
                out += (i ? " " : "") + fmt(p.real()) + ',' + fmt(p.imag());
            }
            out += "\" fill=\"" + hex_colour(static_cast<std::uint8_t>(cells.string_degree[k] + 1)) + "\"/>\n";
        }
        out += "</svg>\n";
        return out;
    }

    const std::vector<FigurePreset>& figure_presets() {
        static const std::vector<FigurePreset> presets{
            {"gauss-d12", "gauss", 12, false, "Gaussian integers of degree <= 12 for X = -1+i"},
            {"q7-d11", "q7", 11, true, "translates F + p(X), degree <= 11, X = (-1+sqrt(-7))/2"},
            {"q11-d0", "q11", 0, true, "degree 0 translates for X = (1+sqrt(-11))/2"},
            {"q11-d1", "q11", 1, true, "degree <= 1 translates for X = (1+sqrt(-11))/2"},
            {"q11-d2", "q11", 2, true, "degree <= 2 translates for X = (1+sqrt(-11))/2"},
            {"q11-d3", "q11", 3, true, "degree <= 3 translates for X = (1+sqrt(-11))/2"},
            {"q11-d4", "q11", 4, true, "degree <= 4 translates for X = (1+sqrt(-11))/2"},
            {"q11-d7", "q11", 7, true, "degree <= 7 translates for X = (1+sqrt(-11))/2"},
            {"one-plus-sqrt-2-d9", "one-plus-sqrt-2", 9, true, "degree <= 9 translates for X = 1+sqrt(-2)"},
            {"mu3-d7", "mu3", 7, true, "degree <= 7 translates for X = -2 over Z[j]"},
            {"mu4-d4", "mu4", 4, true, "degree <= 4 translates for X = 1+2i"},
            {"mu6-d2", "mu6", 2, true, "degree <= 2 translates for X = 2-j"},
        };
        return presets;
    }

} // namespace holdring
