// include/holdring/render.hpp: point clouds and tile images of sigma over
// bounded-degree strings, rasterized to PPM (P6) and SVG.

#pragma once

#include <holdring/quadratic.hpp>
#include <holdring/ring.hpp>

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace holdring {

    /// sigma of every string of degree <= d. Entry k belongs to the string
    /// whose base-(n+1) digits (Zero = 0, w^e = e+1) spell k little-endian.
    struct TileCloud {
        std::string system;
        std::size_t degree = 0;
        std::vector<QuadraticInt> exact;
        std::vector<std::complex<double>> points;
        /// Position of the top non-Zero digit (0 for the empty string).
        std::vector<std::uint8_t> string_degree;
        std::size_t collisions = 0;
    };

    /// Largest point count accepted by tile_points.
    inline constexpr std::uint64_t kMaxTilePoints = std::uint64_t{1} << 24;

    /// Throws TooLarge above kMaxTilePoints points or if coordinates overflow 62 bits.
    [[nodiscard]] TileCloud tile_points(const SystemBinding& binding, std::size_t d);

    using Quad = std::array<std::complex<double>, 4>;

    struct CellSet {
        std::string system;
        std::size_t degree = 0;
        std::vector<Quad> cells;
        std::vector<std::uint8_t> string_degree;
    };

    /// The parallelogram with corners 0, 1, 1 + w, w (for Z the unit square).
    [[nodiscard]] Quad fundamental_domain(const QuadraticOrder& order);

    /// Translates sigma(p) + F, scaled by X^{-d} when `rescale` is set.
    [[nodiscard]] CellSet tile_cells(const SystemBinding& binding, std::size_t d, bool rescale);
    [[nodiscard]] CellSet tile_cells(const TileCloud& cloud, const SystemBinding& binding, bool rescale);

    /// The rescaled set X^{-d}(sigma(P_d) + F).
    [[nodiscard]] inline CellSet z_n_set(const SystemBinding& binding, std::size_t d) {
        return tile_cells(binding, d, true);
    }

    struct Viewport {
        double re_min = -1.0;
        double re_max = 1.0;
        double im_min = -1.0;
        double im_max = 1.0;
        friend bool operator==(const Viewport&, const Viewport&) = default;
    };

    /// Bounding box grown by `margin` (relative) and widened to the pixel aspect ratio.
    [[nodiscard]] Viewport fit_viewport(const std::vector<std::complex<double>>& points, std::size_t width,
                                        std::size_t height, double margin = 0.05);
    [[nodiscard]] Viewport fit_viewport(const CellSet& cells, std::size_t width, std::size_t height,
                                        double margin = 0.05);

    struct TileImage {
        std::size_t width = 0;
        std::size_t height = 0;
        Viewport viewport;
        /// Row-major, top row first; 0 = empty, otherwise string degree + 1 (saturating).
        std::vector<std::uint8_t> pixels;
        std::string system;
        std::size_t degree = 0;
        std::size_t point_count = 0;
        std::size_t clipped = 0;

        [[nodiscard]] std::uint8_t at(std::size_t x, std::size_t y) const { return pixels[y * width + x]; }
        [[nodiscard]] std::size_t occupied() const;
    };

    inline constexpr std::size_t kMaxRasterSide = 8192;

    [[nodiscard]] TileImage rasterize(const TileCloud& cloud, const Viewport& view, std::size_t width,
                                      std::size_t height);
    /// A pixel is covered when its centre lies in some cell.
    [[nodiscard]] TileImage rasterize(const CellSet& cells, const Viewport& view, std::size_t width,
                                      std::size_t height);

    /// |A xor B| / |A or B| over occupied pixels; images must share size.
    [[nodiscard]] double symmetric_difference_fraction(const TileImage& a, const TileImage& b);

    /// Pixel (x, y) of the centre of complex point z, or nullopt when outside.
    [[nodiscard]] std::optional<std::array<std::size_t, 2>> pixel_of(const TileImage& image, std::complex<double> z);

    [[nodiscard]] std::string encode_ppm(const TileImage& image);
    void write_ppm(const TileImage& image, const std::filesystem::path& path);
    [[nodiscard]] std::string encode_svg(const TileCloud& cloud, const Viewport& view, std::size_t width,
                                         std::size_t height);
    [[nodiscard]] std::string encode_svg(const CellSet& cells, const Viewport& view, std::size_t width,
                                         std::size_t height);
    void write_text_file(const std::string& contents, const std::filesystem::path& path);

    /// Named reproduction settings for the published tile pictures.
    struct FigurePreset {
        std::string id;
        std::string system;
        std::size_t degree;
        bool cells;
        std::string caption;
    };
    [[nodiscard]] const std::vector<FigurePreset>& figure_presets();

} // namespace holdring
