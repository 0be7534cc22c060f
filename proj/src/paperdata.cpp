#include "z4lat/paperdata.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace z4lat::paperdata {

namespace {

constexpr const char* kGridC26[] = {
    "01111011110001230212",
    "11001011111000101120",
    "11011110000100311232",
    "00100110101110333302",
    "11000110111101210021",
    "01110001111110003003",
};
constexpr const char* kGridC27[] = {
    "10011100010113320130",
    "01011010100013333030",
    "01010101010002131131",
    "00010010111112303103",
    "11110010010101330201",
    "11111111110002220230",
    "01111100101111000003",
};
constexpr const char* kGridC28[] = {
    "001101001010102330111",
    "000110100101011211211",
    "100011010010101123101",
    "010001101001011132130",
    "101000110100100331031",
    "110100001010011211101",
    "011010010101001121332",
};
constexpr const char* kGridC29[] = {
    "1110001000001111103030",
    "1101100110101002001303",
    "1100001001101112030103",
    "1101110010010002110213",
    "0110111000111010010212",
    "1010100110011011202011",
    "0001110111111003232200",
};
constexpr const char* kGridC33[] = {
    "100101011010001020213213",
    "110010100011100203101010",
    "011111010001001010333131",
    "110111000110111200023000",
    "001010111111011113223001",
    "101011111111100312212322",
    "001001111100011302030032",
    "111110101111110230220033",
    "010110111101001020201010",
};
constexpr const char* kGridC34[] = {
    "010110100101010311033313",
    "001001110101000113202213",
    "011010010101003100021323",
    "000111011101110221331112",
    "101000101001001031101030",
    "011111010001100322300012",
    "110010100111111103122323",
    "111010010111112213011100",
    "110000111011110000232003",
    "111111111100002202022023",
};
constexpr const char* kGridC36[] = {
    "11100000110011011001003323121",
    "01110110011000100010011231213",
    "11010011111010100111111102121",
    "01000011111101001010110130212",
    "00011010110110010100013213121",
    "00011100011010111101111022010",
    "11111111111111000000000002023",
};
constexpr const char* kGridC41[] = {
    "1001101011010100100110113101331",
    "1011111100100111100012210033331",
    "1100110001000111100003301002331",
    "0001000111100111010012301003121",
    "0011111001111011101002203222032",
    "1000011011111010001111023333310",
    "1011111111100101011011201310220",
    "0110100100000101010013122113213",
    "1000010101101100100100130112332",
    "1110110011011110111101132113031",
};
constexpr const char* kGridC43[] = {
    "101010101001101010001001103210230",
    "110011001110110011000012211331132",
    "001001011111011101100013131220013",
    "101101111010010011001003033110211",
    "010101110000001100110003300330330",
    "111111101011001001111101102202120",
    "101101111001101111001112230012100",
    "010011110011110011011111020211320",
    "000100111000111110111113022221133",
    "111111111111110000000000020232222",
};
constexpr const char* kGridC44[] = {
    "011110001001001001011010122113202",
    "001111000100100100101103210031100",
    "000111100011010010010120101021330",
    "100011110001101001001002010320313",
    "010001111000110100100130203010013",
    "001000111101011010010011022123003",
    "000100011110101101001031320012300",
    "100010001110010110100103312003012",
    "110001000111001011010002331022301",
    "111000100010100101101032013122012",
    "111100010000010010110121023132003",
};
constexpr const char* kGridC45[] = {
    "000110111110100101100000111131021032",
    "100011011111010010110000011213322301",
    "110001101011101001111000001121332032",
    "111000110101110100111100000232133223",
    "011100011010111010011110000323013320",
    "101110001001011101001111000232103112",
    "110111000100101110000111100001230333",
    "011011100010010111000011110120101213",
    "001101110101001011000001111130230121",
};

}  // namespace

const std::vector<CodeGrid>& code_grids() {
    static const std::vector<CodeGrid> grids = {
        {"C26", 26, 6, kGridC26},  {"C27", 27, 7, kGridC27},  {"C28", 28, 7, kGridC28},
        {"C29", 29, 7, kGridC29},  {"C33", 33, 9, kGridC33},  {"C34", 34, 10, kGridC34},
        {"C36", 36, 7, kGridC36},  {"C41", 41, 10, kGridC41}, {"C43", 43, 10, kGridC43},
        {"C44", 44, 11, kGridC44}, {"C45", 45, 9, kGridC45},
    };
    return grids;
}

std::vector<std::string> builtin_names() {
    std::vector<std::string> out;
    for (const auto& g : code_grids()) out.emplace_back(g.name);
    return out;
}

bool is_builtin_name(const std::string& name) {
    for (const auto& g : code_grids())
        if (name == g.name) return true;
    return false;
}

const Z4Code& builtin_code(const std::string& name) {
    static std::map<std::string, Z4Code> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    for (const auto& g : code_grids()) {
        if (name != g.name) continue;
        std::vector<Z4Vector> rows;
        rows.reserve(g.k1);
        for (int i = 0; i < g.k1; ++i) rows.push_back(Z4Vector::from_digits(g.rows[i]));
        Z4Code code = complete_from_upper(g.n, rows);
        if (!code.self_dual()) throw std::logic_error("builtin code failed self-duality");
        return cache.emplace(name, std::move(code)).first->second;
    }
    throw std::invalid_argument("unknown builtin code: " + name);
}

const std::vector<Table2Row>& table2() {
    static const std::vector<Table2Row> rows = {
        {"C26", 12, 6, 3, 26, 6, 12},  {"C27", 12, 6, 3, 27, 7, 12},
        {"C28", 12, 8, 4, 28, 7, 12},  {"C29", 12, 6, 3, 29, 7, 12},
        {"C33", 12, 6, 3, 33, 9, 12},  {"C34", 12, 6, 3, 34, 10, 12},
        {"C36", 16, 8, 4, 36, 7, 16},  {"C41", 16, 8, 4, 41, 10, 16},
        {"C43", 16, 8, 4, 43, 10, 16}, {"C44", 16, 8, 4, 44, 11, 16},
        {"C45", 16, 8, 4, 45, 9, 16},
    };
    return rows;
}

const std::vector<Table3Row>& table3() {
    static const std::vector<Table3Row> rows = {
        {"C26", 3, 3120}, {"C27", 3, 2664}, {"C28", 3, 1728},  {"C29", 3, 1856},
        {"C33", 3, 752},  {"C34", 3, 528},  {"C36", 4, 51032}, {"C41", 4, 15426},
        {"C43", 4, 9286}, {"C44", 4, 8392}, {"C45", 4, 7866},
    };
    return rows;
}

const std::vector<Table1Row>& table1() {
    static const std::vector<Table1Row> rows = {
        {25, 8, 8, "sub(C26)", true},   {26, 12, 12, "C26", true},
        {27, 12, 12, "C27", true},      {28, 12, 12, "C28", true},
        {29, 12, 12, "C29", true},      {30, 12, 12, "external", false},
        {31, 12, 12, "sub(C32)", false},{32, 16, 16, "C32", false},
        {33, 12, 12, "C33", true},      {34, 12, 12, "C34", true},
        {35, 12, 12, "sub(C36)", true}, {36, 16, 16, "C36", true},
        {37, 12, 16, "open", false},    {38, 16, 16, "external", false},
        {39, 16, 16, "external", false},{40, 16, 16, "external", false},
        {41, 16, 16, "C41", true},      {42, 16, 16, "external", false},
        {43, 16, 16, "C43", true},      {44, 16, 16, "C44", true},
        {45, 16, 16, "C45", true},      {46, 16, 16, "external", false},
        {47, 16, 16, "external", false},
    };
    return rows;
}

const std::vector<MuMaxRow>& mu_max_table() {
    static const std::vector<MuMaxRow> rows = [] {
        std::vector<MuMaxRow> out;
        for (int n = 25; n <= 47; ++n) {
            if (n == 25) out.push_back({n, 2, 2});
            else if (n == 37 || n == 41) out.push_back({n, 3, 4});
            else if (n == 32 || n >= 36) out.push_back({n, 4, 4});
            else out.push_back({n, 3, 3});
        }
        return out;
    }();
    return rows;
}

const std::vector<Swe26Term>& swe26_terms() {
    static const std::vector<Swe26Term> terms = {
        {26, 0, 0, 1},        {23, 0, 3, 30},       {22, 0, 4, 255},
        {21, 0, 5, 1100},     {20, 0, 6, 3571},     {19, 0, 7, 9990},
        {18, 0, 8, 24330},    {17, 0, 9, 49680},    {16, 0, 10, 83237},
        {15, 0, 11, 119004},  {14, 12, 0, 2880},    {14, 0, 12, 150750},
        {13, 12, 1, 40320},   {13, 0, 13, 164680},  {12, 12, 2, 262080},
        {12, 0, 14, 150750},  {11, 12, 3, 1048320}, {11, 0, 15, 119004},
        {10, 16, 0, 17408},   {10, 12, 4, 2882880}, {10, 0, 16, 83237},
        {9, 16, 1, 174080},   {9, 12, 5, 5765760},  {9, 0, 17, 49680},
        {8, 16, 2, 783360},   {8, 12, 6, 8648640},  {8, 0, 18, 24330},
        {7, 16, 3, 2088960},  {7, 12, 7, 9884160},  {7, 0, 19, 9990},
        {6, 20, 0, 16384},    {6, 16, 4, 3655680},  {6, 12, 8, 8648640},
        {6, 0, 20, 3571},     {5, 20, 1, 98304},    {5, 16, 5, 4386816},
        {5, 12, 9, 5765760},  {5, 0, 21, 1100},     {4, 20, 2, 245760},
        {4, 16, 6, 3655680},  {4, 12, 10, 2882880}, {4, 0, 22, 255},
        {3, 20, 3, 327680},   {3, 16, 7, 2088960},  {3, 12, 11, 1048320},
        {3, 0, 23, 30},       {2, 20, 4, 245760},   {2, 16, 8, 783360},
        {2, 12, 12, 262080},  {1, 20, 5, 98304},    {1, 16, 9, 174080},
        {1, 12, 13, 40320},   {0, 20, 6, 16384},    {0, 16, 10, 17408},
        {0, 12, 14, 2880},    {0, 0, 26, 1},
    };
    return terms;
}

SWE swe26_expected() {
    SWE out;
    out.n = 26;
    for (const auto& t : swe26_terms()) out.terms[{t.a, t.b, t.c}] = t.coeff;
    return out;
}

const Theta41Data& theta41() {
    static const Theta41Data data = {
        {1, -82, 1476, -3280},
        2,
        0,
        {15426ULL, 1223136ULL, 42945024ULL, 867179520ULL, 11719744560ULL, 116521216256ULL,
         909236984832ULL},
        2,
    };
    return data;
}

}  // namespace z4lat::paperdata
