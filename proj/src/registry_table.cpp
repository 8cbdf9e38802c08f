#include "fano95/registry.hpp"

namespace fano95 {

// The classification table. Regenerate with tools or edit by hand; the
// loader cross-checks every row against the computed invariants.
const std::string& embedded_table_text() {
    static const std::string text = R"TSV(N	d	a1	a2	a3	a4	a5	basket	presentation	elliptic	omega	unique	k3_route	dense
1	4	1	1	1	1	1	-	F0	special_construction	1	0	quartic	1
2	5	1	1	1	1	2	2:1:1	F1	special_construction	1	0	double_quintic	1
3	6	1	1	1	1	3	-	F0	none	0	0	double_sextic	0
4	6	1	1	1	2	2	2:1:3	F3HAT	natural_projection	0	0	anticanonical_pencil	1
5	7	1	1	1	2	3	2:1:1;3:1:1	F2	natural_projection	0	1	anticanonical_pencil	1
6	8	1	1	1	2	4	2:1:2	F2	natural_projection	0	0	anticanonical_pencil	1
7	8	1	1	2	2	3	2:1:4;3:1:1	F5	special_construction	1	0	quartic	1
8	9	1	1	1	3	4	4:1:1	F1	natural_projection	0	0	anticanonical_pencil	0
9	9	1	1	2	3	3	2:1:1;3:1:3	F3HAT	natural_projection	1	0	quartic	1
10	10	1	1	1	3	5	3:1:1	F0	natural_projection	0	0	anticanonical_pencil	0
11	10	1	1	2	2	5	2:1:5	F0	special_construction	1	0	double_sextic	1
12	10	1	1	2	3	4	2:1:2;3:1:1;4:1:1	F2	natural_projection	0	0	double_quintic	1
13	11	1	1	2	3	5	2:1:1;3:1:1;5:2:1	F2	natural_projection	0	0	double_sextic	1
14	12	1	1	1	4	6	2:1:1	F0	natural_projection	0	1	anticanonical_pencil	0
15	12	1	1	2	3	6	2:1:2;3:1:2	F2	natural_projection	0	0	double_sextic	1
16	12	1	1	2	4	5	2:1:3;5:1:1	F1	natural_projection	0	0	anticanonical_pencil	0
17	12	1	1	3	4	4	4:1:3	F3HAT	natural_projection	1	0	quartic	1
18	12	1	2	2	3	5	2:1:6;5:2:1	F1	natural_projection	0	0	index_a3_pencil	0
19	12	1	2	3	3	4	2:1:3;3:1:4	F0	special_construction	1	0	quartic	1
20	13	1	1	3	4	5	3:1:1;4:1:1;5:1:1	F3	natural_projection	1	0	quartic	1
21	14	1	1	2	4	7	2:1:3;4:1:1	F0	natural_projection	0	0	anticanonical_pencil	0
22	14	1	2	2	3	7	2:1:7;3:1:1	F0	natural_projection	0	1	index_a3_pencil	0
23	14	1	2	3	4	5	2:1:3;3:1:1;4:1:1;5:2:1	F2	natural_projection	0	0	quartic	1
24	15	1	1	2	5	7	2:1:1;7:2:1	F1	natural_projection	0	0	anticanonical_pencil	0
25	15	1	1	3	4	7	4:1:1;7:3:1	F2	natural_projection	0	0	double_sextic	1
26	15	1	1	3	5	6	3:1:2;6:1:1	F1	natural_projection	1	0	double_quintic	0
27	15	1	2	3	5	5	2:1:1;5:2:3	F3HAT	natural_projection	0	0	special_case	1
28	15	1	3	3	4	5	3:1:5;4:1:1	F0	natural_projection	0	1	index_a3_pencil	0
29	16	1	1	2	5	8	2:1:2;5:2:1	F0	natural_projection	0	0	anticanonical_pencil	0
30	16	1	1	3	4	8	3:1:1;4:1:2	F2	natural_projection	1	0	double_sextic	1
31	16	1	1	4	5	6	2:1:1;5:1:1;6:1:1	F2	natural_projection	0	0	quartic	1
32	16	1	2	3	4	7	2:1:4;3:1:1;7:3:1	F1	natural_projection	0	0	double_sextic	0
33	17	1	2	3	5	7	2:1:1;3:1:1;5:2:1;7:2:1	F2	natural_projection	0	0	flip_construction	1
34	18	1	1	2	6	9	2:1:3;3:1:1	F0	natural_projection	0	1	anticanonical_pencil	0
35	18	1	1	3	5	9	3:1:2;5:1:1	F0	natural_projection	0	0	double_sextic	0
36	18	1	1	4	6	7	2:1:1;4:1:1;7:1:1	F2	natural_projection	1	0	quartic	1
37	18	1	2	3	4	9	2:1:4;3:1:2;4:1:1	F0	natural_projection	0	1	double_sextic	0
38	18	1	2	3	5	8	2:1:2;5:2:1;8:3:1	F2	natural_projection	0	0	double_sextic	1
39	18	1	3	4	5	6	2:1:1;3:1:3;4:1:1;5:1:1	F0	natural_projection	0	1	quartic	0
40	19	1	3	4	5	7	3:1:1;4:1:1;5:2:1;7:3:1	F2	natural_projection	0	0	quartic	1
41	20	1	1	4	5	10	2:1:1;5:1:2	F2	natural_projection	0	0	double_sextic	1
42	20	1	2	3	5	10	2:1:2;3:1:1;5:2:2	F2	natural_projection	0	0	double_sextic	1
43	20	1	2	4	5	9	2:1:5;9:4:1	F1	natural_projection	0	0	double_sextic	0
44	20	1	2	5	6	7	2:1:3;6:1:1;7:2:1	F2	natural_projection	1	0	quartic	1
45	20	1	3	4	5	8	3:1:1;4:1:2;8:3:1	F1	natural_projection	0	0	double_quintic	0
46	21	1	1	3	7	10	10:3:1	F1	natural_projection	0	0	anticanonical_pencil	0
47	21	1	1	5	7	8	5:2:1;8:1:1	F1	natural_projection	0	0	quartic	0
48	21	1	2	3	7	9	2:1:1;3:1:2;9:2:1	F1	natural_projection	0	0	flip_construction	0
49	21	1	3	5	6	7	3:1:3;5:2:1;6:1:1	F0	natural_projection	1	0	quartic	0
50	22	1	1	3	7	11	3:1:1;7:3:1	F0	natural_projection	0	0	anticanonical_pencil	0
51	22	1	1	4	6	11	2:1:1;4:1:1;6:1:1	F0	natural_projection	1	0	double_sextic	0
52	22	1	2	4	5	11	2:1:5;4:1:1;5:1:1	F0	natural_projection	0	1	double_sextic	0
53	24	1	1	3	8	12	3:1:2;4:1:1	F0	natural_projection	0	1	anticanonical_pencil	0
54	24	1	1	6	8	9	2:1:1;3:1:1;9:1:1	F1	natural_projection	0	0	quartic	0
55	24	1	2	3	7	12	2:1:2;3:1:2;7:2:1	F0	natural_projection	0	0	flip_construction	0
56	24	1	2	3	8	11	2:1:3;11:3:1	F1	natural_projection	0	0	special_case	0
57	24	1	3	4	5	12	3:1:2;4:1:2;5:2:1	F0	natural_projection	0	1	double_sextic	0
58	24	1	3	4	7	10	2:1:1;7:3:1;10:3:1	F2	natural_projection	0	0	flip_construction	1
59	24	1	3	6	7	8	2:1:1;3:1:4;7:1:1	F0	natural_projection	0	1	quartic	0
60	24	1	4	5	6	9	2:1:2;3:1:1;5:1:1;9:4:1	F1	none	0	0	quartic	0
61	25	1	4	5	7	9	4:1:1;7:2:1;9:4:1	F2	natural_projection	0	0	double_quintic	1
62	26	1	1	5	7	13	5:2:1;7:1:1	F0	natural_projection	0	0	double_sextic	0
63	26	1	2	3	8	13	2:1:3;3:1:1;8:3:1	F0	natural_projection	0	0	flip_construction	0
64	26	1	2	5	6	13	2:1:4;5:2:1;6:1:1	F0	natural_projection	1	0	double_sextic	0
65	27	1	2	5	9	11	2:1:1;5:1:1;11:2:1	F1	natural_projection	0	0	special_case	0
66	27	1	5	6	7	9	3:1:1;5:1:1;6:1:1;7:2:1	F0	natural_projection	0	1	quartic	0
67	28	1	1	4	9	14	2:1:1;9:4:1	F0	natural_projection	0	0	anticanonical_pencil	0
68	28	1	3	4	7	14	2:1:1;3:1:1;7:3:2	F2	natural_projection	0	0	special_case	1
69	28	1	4	6	7	11	2:1:2;6:1:1;11:4:1	F1	natural_projection	0	0	quartic	0
70	30	1	1	4	10	15	2:1:1;4:1:1;5:1:1	F0	natural_projection	0	1	anticanonical_pencil	0
71	30	1	1	6	8	15	2:1:1;3:1:1;8:1:1	F0	natural_projection	0	0	double_sextic	0
72	30	1	2	3	10	15	2:1:3;3:1:2;5:2:1	F0	natural_projection	0	1	flip_construction	0
73	30	1	2	6	7	15	2:1:5;3:1:1;7:1:1	F0	natural_projection	0	1	double_sextic	0
74	30	1	3	4	10	13	2:1:1;4:1:1;13:3:1	F1	natural_projection	0	0	flip_construction	0
75	30	1	4	5	6	15	2:1:2;3:1:1;4:1:1;5:1:2	F0	none	0	0	double_sextic	0
76	30	1	5	6	8	11	2:1:1;8:3:1;11:5:1	F2	natural_projection	0	0	double_quintic	1
77	32	1	2	5	9	16	2:1:2;5:1:1;9:2:1	F0	natural_projection	0	0	double_sextic	0
78	32	1	4	5	7	16	4:1:2;5:1:1;7:2:1	F0	natural_projection	0	1	double_sextic	0
79	33	1	3	5	11	14	5:1:1;14:3:1	F1	natural_projection	0	0	flip_construction	0
80	34	1	3	4	10	17	2:1:1;3:1:1;4:1:1;10:3:1	F0	natural_projection	0	0	flip_construction	0
81	34	1	4	6	7	17	2:1:2;4:1:1;6:1:1;7:3:1	F0	natural_projection	0	1	double_sextic	0
82	36	1	1	5	12	18	5:2:1;6:1:1	F0	natural_projection	0	0	anticanonical_pencil	0
83	36	1	3	4	11	18	2:1:1;3:1:2;11:4:1	F0	natural_projection	0	0	special_case	0
84	36	1	7	8	9	12	3:1:1;4:1:1;7:2:1;8:1:1	F0	none	0	0	quartic	0
85	38	1	3	5	11	19	3:1:1;5:1:1;11:3:1	F0	natural_projection	0	0	flip_construction	0
86	38	1	5	6	8	19	2:1:1;5:1:1;6:1:1;8:3:1	F0	natural_projection	0	1	double_sextic	0
87	40	1	5	7	8	20	4:1:1;5:2:2;7:1:1	F0	none	0	0	double_sextic	0
88	42	1	1	6	14	21	2:1:1;3:1:1;7:1:1	F0	natural_projection	0	1	anticanonical_pencil	0
89	42	1	2	5	14	21	2:1:3;5:1:1;7:2:1	F0	natural_projection	0	1	flip_construction	0
90	42	1	3	4	14	21	2:1:1;3:1:2;4:1:1;7:3:1	F0	natural_projection	0	1	flip_construction	0
91	44	1	4	5	13	22	2:1:1;5:2:1;13:4:1	F0	natural_projection	0	0	flip_construction	0
92	48	1	3	5	16	24	3:1:2;5:1:1;8:3:1	F0	natural_projection	0	1	flip_construction	0
93	50	1	7	8	10	25	2:1:1;5:2:1;7:3:1;8:1:1	F0	none	0	0	double_sextic	0
94	54	1	4	5	18	27	2:1:1;4:1:1;5:2:1;9:4:1	F0	natural_projection	0	1	flip_construction	0
95	66	1	5	6	22	33	2:1:1;3:1:1;5:2:1;11:5:1	F0	natural_projection	0	1	flip_construction	0
)TSV";
    return text;
}

}  // namespace fano95
