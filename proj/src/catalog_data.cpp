// Generated data tables for the embedded design catalog.
// Do not edit by hand; regenerate via the data tooling.
#include "triholes/catalog_data.hpp"

namespace triholes::cat {

const std::vector<ItsEntry>& its_entries() {
  static const std::vector<ItsEntry> es = {
    {11,2,{{0,1,2,3},{5,6,7},{3,4}},{{0,4,6,1},{0,4,7,1},{0,5,9,2},{0,6,8,1},{0,7,10,1},{0,8,10,1},{1,4,6,1},{1,4,7,1},{1,5,8,2},{1,6,10,1},{1,7,9,1},{1,9,10,1},{2,4,5,2},{2,6,8,1},{2,6,10,1},{2,7,9,1},{2,7,10,1},{2,8,9,1},{3,5,10,2},{3,6,9,2},{3,7,8,2},{4,8,9,1},{4,8,10,1},{4,9,10,1}}},
    {13,2,{{0,1,2,3},{7,8,9},{3,4,5,6}},{{0,4,7,2},{0,5,8,2},{0,6,9,2},{0,10,11,1},{0,10,12,1},{0,11,12,1},{1,4,9,1},{1,4,11,1},{1,5,7,2},{1,6,10,1},{1,6,11,1},{1,8,12,2},{1,9,10,1},{2,4,9,1},{2,4,12,1},{2,5,10,1},{2,5,12,1},{2,6,8,2},{2,7,11,2},{2,9,10,1},{3,7,10,2},{3,8,11,2},{3,9,12,2},{4,8,10,2},{4,11,12,1},{5,9,11,2},{5,10,12,1},{6,7,12,2},{6,10,11,1}}},
    {14,2,{{0,1,2,3,4},{5,6,7,8},{3,4,5,6,7}},{{0,5,9,2},{0,6,10,2},{0,7,11,2},{0,8,12,1},{0,8,13,1},{0,12,13,1},{1,5,10,1},{1,5,11,1},{1,6,9,1},{1,6,11,1},{1,7,12,1},{1,7,13,1},{1,8,9,1},{1,8,10,1},{1,12,13,1},{2,5,12,2},{2,6,13,2},{2,7,9,1},{2,7,10,1},{2,8,10,1},{2,8,11,1},{2,9,11,1},{3,8,9,1},{3,8,11,1},{3,9,12,1},{3,10,12,1},{3,10,13,1},{3,11,13,1},{4,8,12,1},{4,8,13,1},{4,9,10,1},{4,9,13,1},{4,10,11,1},{4,11,12,1},{5,10,13,1},{5,11,13,1},{6,9,12,1},{6,11,12,1},{7,9,13,1},{7,10,12,1},{9,10,11,1}}},
    {18,2,{{0,1,2,3,4,5,6},{7,8,9,10},{5,6,7,8,9}},{{0,7,11,2},{0,8,12,2},{0,9,13,2},{0,10,14,2},{0,15,16,1},{0,15,17,1},{0,16,17,1},{1,7,12,2},{1,8,14,2},{1,9,11,2},{1,10,13,2},{1,15,16,1},{1,15,17,1},{1,16,17,1},{2,7,13,2},{2,8,11,2},{2,9,15,1},{2,9,17,1},{2,10,15,1},{2,10,16,1},{2,12,14,1},{2,12,17,1},{2,14,16,1},{3,7,15,2},{3,8,16,1},{3,8,17,1},{3,9,14,1},{3,9,16,1},{3,10,11,1},{3,10,12,1},{3,11,12,1},{3,13,14,1},{3,13,17,1},{4,7,16,2},{4,8,15,2},{4,9,14,1},{4,9,17,1},{4,10,11,1},{4,10,17,1},{4,11,13,1},{4,12,13,1},{4,12,14,1},{5,10,12,1},{5,10,16,1},{5,11,17,2},{5,12,13,1},{5,13,16,1},{5,14,15,2},{6,10,15,1},{6,10,17,1},{6,11,14,1},{6,11,16,1},{6,12,16,1},{6,12,17,1},{6,13,14,1},{6,13,15,1},{7,14,17,2},{8,13,16,1},{8,13,17,1},{9,12,15,1},{9,12,16,1},{11,12,15,1},{11,13,15,1},{11,14,16,1}}},
    {23,2,{{0,1,2,3,4,5,6,7},{8,9,10,11,12,13,14},{6,7,8,9,10}},{{0,8,15,2},{0,9,16,2},{0,10,17,2},{0,11,18,2},{0,12,19,2},{0,13,20,2},{0,14,21,1},{0,14,22,1},{0,21,22,1},{1,8,16,2},{1,9,20,2},{1,10,15,2},{1,11,17,2},{1,12,18,2},{1,13,19,2},{1,14,21,1},{1,14,22,1},{1,21,22,1},{2,8,17,2},{2,9,15,2},{2,10,20,1},{2,10,21,1},{2,11,21,1},{2,11,22,1},{2,12,16,2},{2,13,18,2},{2,14,19,2},{2,20,22,1},{3,8,18,2},{3,9,17,2},{3,10,19,1},{3,10,21,1},{3,11,21,1},{3,11,22,1},{3,12,20,2},{3,13,16,2},{3,14,15,2},{3,19,22,1},{4,8,19,2},{4,9,18,2},{4,10,16,2},{4,11,15,2},{4,12,17,1},{4,12,22,1},{4,13,21,2},{4,14,20,2},{4,17,22,1},{5,8,21,1},{5,8,22,1},{5,9,21,1},{5,9,22,1},{5,10,19,1},{5,10,20,1},{5,11,16,1},{5,11,19,1},{5,12,15,2},{5,13,17,2},{5,14,16,1},{5,14,18,1},{5,18,20,1},{6,11,16,1},{6,11,19,1},{6,12,17,1},{6,12,21,1},{6,13,15,1},{6,13,22,1},{6,14,17,1},{6,14,18,1},{6,15,20,1},{6,16,22,1},{6,18,21,1},{6,19,20,1},{7,11,20,2},{7,12,21,1},{7,12,22,1},{7,13,15,1},{7,13,22,1},{7,14,16,1},{7,14,17,1},{7,15,18,1},{7,16,19,1},{7,17,21,1},{7,18,19,1},{8,20,21,1},{8,20,22,1},{9,19,21,1},{9,19,22,1},{10,18,22,2},{15,16,21,1},{15,16,22,1},{15,17,19,1},{15,17,22,1},{15,18,21,1},{15,19,20,1},{16,17,18,1},{16,17,20,1},{16,18,20,1},{16,19,21,1},{17,18,19,1},{17,20,21,1}}},
    {23,2,{{0,1,2,3,4,5,6,7},{8,9,10,11,12,13,14},{6,7,8,9,10,11,12,13}},{{0,8,15,2},{0,9,16,2},{0,10,17,2},{0,11,18,2},{0,12,19,2},{0,13,20,2},{0,14,21,1},{0,14,22,1},{0,21,22,1},{1,8,16,2},{1,9,20,2},{1,10,15,2},{1,11,17,2},{1,12,18,2},{1,13,19,2},{1,14,21,1},{1,14,22,1},{1,21,22,1},{2,8,17,2},{2,9,15,2},{2,10,20,1},{2,10,21,1},{2,11,21,1},{2,11,22,1},{2,12,16,2},{2,13,18,2},{2,14,19,2},{2,20,22,1},{3,8,18,2},{3,9,17,2},{3,10,19,1},{3,10,21,1},{3,11,21,1},{3,11,22,1},{3,12,20,2},{3,13,16,2},{3,14,15,2},{3,19,22,1},{4,8,19,2},{4,9,18,2},{4,10,16,2},{4,11,15,1},{4,11,20,1},{4,12,21,2},{4,13,22,2},{4,14,17,2},{4,15,20,1},{5,8,21,1},{5,8,22,1},{5,9,21,1},{5,9,22,1},{5,10,19,1},{5,10,20,1},{5,11,16,1},{5,11,20,1},{5,12,15,2},{5,13,17,2},{5,14,16,1},{5,14,18,1},{5,18,19,1},{6,14,20,2},{6,15,16,1},{6,15,22,1},{6,16,22,1},{6,17,19,1},{6,17,21,1},{6,18,19,1},{6,18,21,1},{7,14,16,1},{7,14,18,1},{7,15,19,1},{7,15,22,1},{7,16,22,1},{7,17,20,1},{7,17,21,1},{7,18,20,1},{7,19,21,1},{8,20,21,1},{8,20,22,1},{9,19,21,1},{9,19,22,1},{10,18,22,2},{11,15,19,1},{11,16,19,1},{12,17,22,2},{13,15,21,2},{15,16,17,1},{15,17,18,1},{15,18,20,1},{16,17,18,1},{16,18,21,1},{16,19,20,1},{16,20,21,1},{17,19,20,1}}},
    {24,2,{{0,1,2,3,4,5,6,7},{12,13,14,15,16,17},{6,7,8,9,10,11}},{{0,8,12,2},{0,9,13,2},{0,10,14,2},{0,11,15,2},{0,16,18,2},{0,17,19,2},{0,20,21,2},{0,22,23,2},{1,8,14,2},{1,9,12,2},{1,10,15,2},{1,11,16,2},{1,13,20,2},{1,17,18,2},{1,19,22,2},{1,21,23,2},{2,8,13,2},{2,9,16,2},{2,10,12,2},{2,11,17,2},{2,14,19,2},{2,15,22,2},{2,18,21,2},{2,20,23,2},{3,8,15,2},{3,9,14,2},{3,10,16,2},{3,11,18,1},{3,11,19,1},{3,12,23,2},{3,13,21,1},{3,13,22,1},{3,17,20,2},{3,18,19,1},{3,21,22,1},{4,8,17,2},{4,9,20,1},{4,9,22,1},{4,10,13,1},{4,10,23,1},{4,11,12,1},{4,11,20,1},{4,12,21,1},{4,13,18,1},{4,14,21,1},{4,14,22,1},{4,15,18,1},{4,15,19,1},{4,16,19,1},{4,16,23,1},{5,8,21,1},{5,8,23,1},{5,9,15,1},{5,9,17,1},{5,10,17,1},{5,10,18,1},{5,11,13,1},{5,11,22,1},{5,12,20,1},{5,12,22,1},{5,13,18,1},{5,14,21,1},{5,14,23,1},{5,15,19,1},{5,16,19,1},{5,16,20,1},{6,12,18,2},{6,13,19,2},{6,14,20,2},{6,15,21,2},{6,16,22,2},{6,17,23,2},{7,12,19,2},{7,13,23,2},{7,14,18,2},{7,15,20,2},{7,16,21,2},{7,17,22,2},{8,16,20,1},{8,16,23,1},{8,18,22,2},{8,19,20,1},{8,19,21,1},{9,15,23,1},{9,17,21,1},{9,18,19,1},{9,18,20,1},{9,19,23,1},{9,21,22,1},{10,13,22,1},{10,17,21,1},{10,18,23,1},{10,19,20,1},{10,19,21,1},{10,20,22,1},{11,12,21,1},{11,13,21,1},{11,14,22,1},{11,14,23,1},{11,18,20,1},{11,19,23,1},{12,20,22,1},{15,18,23,1}}},
    {16,2,{{0,1,2,3,4,5},{6,7,8}},{{0,6,9,2},{0,7,10,2},{0,8,11,2},{0,12,13,2},{0,14,15,2},{1,6,10,2},{1,7,12,2},{1,8,9,2},{1,11,14,2},{1,13,15,2},{2,6,11,2},{2,7,9,2},{2,8,13,2},{2,10,14,1},{2,10,15,1},{2,12,14,1},{2,12,15,1},{3,6,12,2},{3,7,11,1},{3,7,14,1},{3,8,10,1},{3,8,15,1},{3,9,14,1},{3,9,15,1},{3,10,13,1},{3,11,13,1},{4,6,13,1},{4,6,14,1},{4,7,14,1},{4,7,15,1},{4,8,10,1},{4,8,12,1},{4,9,11,1},{4,9,15,1},{4,10,12,1},{4,11,13,1},{5,6,15,2},{5,7,13,2},{5,8,14,2},{5,9,10,1},{5,9,12,1},{5,10,11,1},{5,11,12,1},{6,13,14,1},{7,11,15,1},{8,12,15,1},{9,10,13,1},{9,11,12,1},{9,13,14,1},{10,11,15,1},{10,12,14,1}}},
    {22,2,{{0,1,2,3,4,5,6,7,8},{9,10,11}},{{0,9,12,2},{0,10,13,2},{0,11,14,2},{0,15,16,2},{0,17,18,2},{0,19,20,1},{0,19,21,1},{0,20,21,1},{1,9,13,2},{1,10,15,2},{1,11,12,2},{1,14,17,2},{1,16,18,2},{1,19,20,1},{1,19,21,1},{1,20,21,1},{2,9,14,2},{2,10,12,2},{2,11,16,2},{2,13,19,2},{2,15,17,1},{2,15,20,1},{2,17,20,1},{2,18,21,2},{3,9,15,2},{3,10,18,2},{3,11,13,2},{3,12,19,2},{3,14,16,1},{3,14,20,1},{3,16,20,1},{3,17,21,2},{4,9,16,2},{4,10,14,2},{4,11,19,2},{4,12,21,2},{4,13,17,2},{4,15,18,1},{4,15,20,1},{4,18,20,1},{5,9,21,2},{5,10,16,2},{5,11,20,2},{5,12,17,2},{5,13,14,1},{5,13,18,1},{5,14,19,1},{5,15,18,1},{5,15,19,1},{6,9,17,2},{6,10,19,2},{6,11,18,1},{6,11,21,1},{6,12,18,1},{6,12,20,1},{6,13,15,1},{6,13,21,1},{6,14,15,1},{6,14,16,1},{6,16,20,1},{7,9,18,1},{7,9,19,1},{7,10,21,2},{7,11,17,1},{7,11,18,1},{7,12,15,2},{7,13,14,1},{7,13,20,1},{7,14,20,1},{7,16,17,1},{7,16,19,1},{8,9,19,1},{8,9,20,1},{8,10,17,1},{8,10,20,1},{8,11,15,1},{8,11,17,1},{8,12,14,1},{8,12,16,1},{8,13,15,1},{8,13,18,1},{8,14,21,1},{8,16,21,1},{8,18,19,1},{9,18,20,1},{10,17,20,1},{11,15,21,1},{12,13,16,1},{12,13,20,1},{12,14,18,1},{13,16,21,1},{14,15,21,1},{14,18,19,1},{15,17,19,1},{16,17,19,1}}},
    {25,2,{{0,1,2,3,4,5,6,7,8},{9,10,11,12,13,14}},{{0,9,17,1},{0,9,18,1},{0,10,15,1},{0,10,17,1},{0,11,19,1},{0,11,24,1},{0,12,19,1},{0,12,21,1},{0,13,20,1},{0,13,24,1},{0,14,18,1},{0,14,20,1},{0,15,23,1},{0,16,22,2},{0,21,23,1},{1,9,16,1},{1,9,19,1},{1,10,20,1},{1,10,23,1},{1,11,16,1},{1,11,18,1},{1,12,19,1},{1,12,22,1},{1,13,20,1},{1,13,23,1},{1,14,15,1},{1,14,24,1},{1,15,21,1},{1,17,22,1},{1,17,24,1},{1,18,21,1},{2,9,19,1},{2,9,24,1},{2,10,15,1},{2,10,16,1},{2,11,21,1},{2,11,23,1},{2,12,15,1},{2,12,22,1},{2,13,16,1},{2,13,23,1},{2,14,20,1},{2,14,21,1},{2,17,20,1},{2,17,24,1},{2,18,19,1},{2,18,22,1},{3,9,17,1},{3,9,22,1},{3,10,18,1},{3,10,20,1},{3,11,17,1},{3,11,24,1},{3,12,16,1},{3,12,23,1},{3,13,19,1},{3,13,22,1},{3,14,19,1},{3,14,21,1},{3,15,20,1},{3,15,24,1},{3,16,21,1},{3,18,23,1},{4,9,15,2},{4,10,16,1},{4,10,22,1},{4,11,16,1},{4,11,21,1},{4,12,24,2},{4,13,17,1},{4,13,19,1},{4,14,17,1},{4,14,23,1},{4,18,20,1},{4,18,23,1},{4,19,22,1},{4,20,21,1},{5,9,16,1},{5,9,21,1},{5,10,18,1},{5,10,22,1},{5,11,15,1},{5,11,17,1},{5,12,18,1},{5,12,23,1},{5,13,15,1},{5,13,21,1},{5,14,22,1},{5,14,24,1},{5,16,20,1},{5,17,20,1},{5,19,23,1},{5,19,24,1},{6,9,18,1},{6,9,23,1},{6,10,21,1},{6,10,23,1},{6,11,15,1},{6,11,20,1},{6,12,20,1},{6,12,21,1},{6,13,22,1},{6,13,24,1},{6,14,19,1},{6,14,22,1},{6,15,17,1},{6,16,17,1},{6,16,24,1},{6,18,19,1},{7,9,20,1},{7,9,23,1},{7,10,21,1},{7,10,24,1},{7,11,19,1},{7,11,22,1},{7,12,15,1},{7,12,17,1},{7,13,15,1},{7,13,18,1},{7,14,17,1},{7,14,23,1},{7,16,20,1},{7,16,21,1},{7,18,22,1},{7,19,24,1},{8,9,20,1},{8,9,24,1},{8,10,19,1},{8,10,24,1},{8,11,18,1},{8,11,22,1},{8,12,16,1},{8,12,17,1},{8,13,17,1},{8,13,21,1},{8,14,16,1},{8,14,18,1},{8,15,21,1},{8,15,23,1},{8,19,20,1},{8,22,23,1},{9,21,22,1},{10,17,19,1},{11,20,23,1},{12,18,20,1},{13,16,18,1},{14,15,16,1},{15,16,19,1},{15,17,18,1},{15,18,24,1},{15,19,22,1},{15,20,22,1},{16,17,18,1},{16,19,23,1},{16,23,24,1},{17,19,21,1},{17,21,23,1},{17,22,23,1},{18,21,24,1},{19,20,21,1},{20,22,24,1},{20,23,24,1},{21,22,24,1}}},
    {23,2,{{0,1,2,3,4,5,6,7},{8,9,10,11,12,13}},{{0,8,16,1},{0,8,17,1},{0,9,14,1},{0,9,20,1},{0,10,14,1},{0,10,20,1},{0,11,18,1},{0,11,21,1},{0,12,16,1},{0,12,18,1},{0,13,22,2},{0,15,19,1},{0,15,21,1},{0,17,19,1},{1,8,20,1},{1,8,21,1},{1,9,14,1},{1,9,15,1},{1,10,14,1},{1,10,17,1},{1,11,19,1},{1,11,21,1},{1,12,20,1},{1,12,22,1},{1,13,17,1},{1,13,18,1},{1,15,22,1},{1,16,18,1},{1,16,19,1},{2,8,15,1},{2,8,16,1},{2,9,19,1},{2,9,21,1},{2,10,18,1},{2,10,21,1},{2,11,20,1},{2,11,22,1},{2,12,20,1},{2,12,22,1},{2,13,14,1},{2,13,16,1},{2,14,17,1},{2,15,19,1},{2,17,18,1},{3,8,14,2},{3,9,16,1},{3,9,20,1},{3,10,15,1},{3,10,22,1},{3,11,15,1},{3,11,17,1},{3,12,18,1},{3,12,21,1},{3,13,17,1},{3,13,19,1},{3,16,22,1},{3,18,21,1},{3,19,20,1},{4,8,17,1},{4,8,22,1},{4,9,17,1},{4,9,18,1},{4,10,16,1},{4,10,20,1},{4,11,14,1},{4,11,22,1},{4,12,15,1},{4,12,21,1},{4,13,19,1},{4,13,20,1},{4,14,19,1},{4,15,18,1},{4,16,21,1},{5,8,20,1},{5,8,22,1},{5,9,17,1},{5,9,21,1},{5,10,18,1},{5,10,19,1},{5,11,15,1},{5,11,18,1},{5,12,17,1},{5,12,19,1},{5,13,15,1},{5,13,16,1},{5,14,20,1},{5,14,21,1},{5,16,22,1},{6,8,15,1},{6,8,21,1},{6,9,19,1},{6,9,22,1},{6,10,16,1},{6,10,22,1},{6,11,16,1},{6,11,20,1},{6,12,14,1},{6,12,19,1},{6,13,18,1},{6,13,21,1},{6,14,17,1},{6,15,20,1},{6,17,18,1},{7,8,18,1},{7,8,19,1},{7,9,18,1},{7,9,22,1},{7,10,19,1},{7,10,21,1},{7,11,14,1},{7,11,17,1},{7,12,16,1},{7,12,17,1},{7,13,15,1},{7,13,20,1},{7,14,22,1},{7,15,20,1},{7,16,21,1},{8,18,19,1},{9,15,16,1},{10,15,17,1},{11,16,19,1},{12,14,15,1},{13,14,21,1},{14,15,16,1},{14,16,18,1},{14,18,19,1},{14,20,22,1},{15,17,21,1},{15,18,22,1},{16,17,20,2},{17,19,22,1},{17,21,22,1},{18,20,21,1},{18,20,22,1},{19,20,21,1},{19,21,22,1}}},
    {32,2,{{0,1,2,3,4,5,6,7,8,9,10},{11,12,13,14,15,16,17,18,19}},{{0,11,20,2},{0,12,21,1},{0,12,22,1},{0,13,21,1},{0,13,26,1},{0,14,29,1},{0,14,30,1},{0,15,24,1},{0,15,27,1},{0,16,24,1},{0,16,28,1},{0,17,25,1},{0,17,31,1},{0,18,27,1},{0,18,30,1},{0,19,23,1},{0,19,25,1},{0,22,23,1},{0,26,29,1},{0,28,31,1},{1,11,21,1},{1,11,29,1},{1,12,25,1},{1,12,28,1},{1,13,23,1},{1,13,24,1},{1,14,23,1},{1,14,26,1},{1,15,21,1},{1,15,24,1},{1,16,22,1},{1,16,25,1},{1,17,27,1},{1,17,30,1},{1,18,31,2},{1,19,28,1},{1,19,29,1},{1,20,26,1},{1,20,27,1},{1,22,30,1},{2,11,26,1},{2,11,27,1},{2,12,20,1},{2,12,21,1},{2,13,21,1},{2,13,28,1},{2,14,24,1},{2,14,25,1},{2,15,22,1},{2,15,30,1},{2,16,23,1},{2,16,27,1},{2,17,23,1},{2,17,30,1},{2,18,24,1},{2,18,25,1},{2,19,29,1},{2,19,31,1},{2,20,26,1},{2,22,31,1},{2,28,29,1},{3,11,21,1},{3,11,31,1},{3,12,22,1},{3,12,30,1},{3,13,20,1},{3,13,30,1},{3,14,20,1},{3,14,22,1},{3,15,25,1},{3,15,28,1},{3,16,24,1},{3,16,29,1},{3,17,23,1},{3,17,27,1},{3,18,26,1},{3,18,29,1},{3,19,24,1},{3,19,27,1},{3,21,28,1},{3,23,31,1},{3,25,26,1},{4,11,22,1},{4,11,23,1},{4,12,20,1},{4,12,24,1},{4,13,25,1},{4,13,30,1},{4,14,27,1},{4,14,28,1},{4,15,25,1},{4,15,29,1},{4,16,20,1},{4,16,22,1},{4,17,26,1},{4,17,31,1},{4,18,21,1},{4,18,27,1},{4,19,21,1},{4,19,26,1},{4,23,31,1},{4,24,28,1},{4,29,30,1},{5,11,23,1},{5,11,24,1},{5,12,23,1},{5,12,29,1},{5,13,22,1},{5,13,31,1},{5,14,20,1},{5,14,21,1},{5,15,26,1},{5,15,31,1},{5,16,30,2},{5,17,25,1},{5,17,28,1},{5,18,24,1},{5,18,26,1},{5,19,22,1},{5,19,27,1},{5,20,27,1},{5,21,29,1},{5,25,28,1},{6,11,22,1},{6,11,25,1},{6,12,23,1},{6,12,30,1},{6,13,26,1},{6,13,29,1},{6,14,21,1},{6,14,24,1},{6,15,20,1},{6,15,28,1},{6,16,25,1},{6,16,27,1},{6,17,24,1},{6,17,29,1},{6,18,20,1},{6,18,23,1},{6,19,28,1},{6,19,30,1},{6,21,31,1},{6,22,26,1},{6,27,31,1},{7,11,26,1},{7,11,29,1},{7,12,24,1},{7,12,25,1},{7,13,24,1},{7,13,27,1},{7,14,22,1},{7,14,28,1},{7,15,22,1},{7,15,31,1},{7,16,20,1},{7,16,23,1},{7,17,20,1},{7,17,26,1},{7,18,21,1},{7,18,30,1},{7,19,23,1},{7,19,31,1},{7,21,30,1},{7,25,28,1},{7,27,29,1},{8,11,25,1},{8,11,30,1},{8,12,27,1},{8,12,31,1},{8,13,23,1},{8,13,28,1},{8,14,23,1},{8,14,25,1},{8,15,21,1},{8,15,26,1},{8,16,26,1},{8,16,31,1},{8,17,20,1},{8,17,29,1},{8,18,22,1},{8,18,29,1},{8,19,20,1},{8,19,24,1},{8,21,30,1},{8,22,27,1},{8,24,28,1},{9,11,24,1},{9,11,28,1},{9,12,26,1},{9,12,31,1},{9,13,25,1},{9,13,27,1},{9,14,30,1},{9,14,31,1},{9,15,23,1},{9,15,27,1},{9,16,21,1},{9,16,29,1},{9,17,21,1},{9,17,28,1},{9,18,22,1},{9,18,23,1},{9,19,22,1},{9,19,26,1},{9,20,25,1},{9,20,30,1},{9,24,29,1},{10,11,27,1},{10,11,30,1},{10,12,26,1},{10,12,29,1},{10,13,20,1},{10,13,31,1},{10,14,26,1},{10,14,31,1},{10,15,23,1},{10,15,29,1},{10,16,21,1},{10,16,28,1},{10,17,21,1},{10,17,22,1},{10,18,25,1},{10,18,28,1},{10,19,25,1},{10,19,30,1},{10,20,24,1},{10,22,27,1},{10,23,24,1},{11,28,31,1},{12,27,28,1},{13,22,29,1},{14,27,29,1},{15,20,30,1},{16,26,31,1},{17,22,24,1},{18,20,28,1},{19,20,21,1},{20,21,22,1},{20,22,23,1},{20,23,24,1},{20,25,31,1},{20,28,29,1},{20,29,31,1},{21,22,24,1},{21,23,25,2},{21,24,27,1},{21,26,27,1},{21,26,28,1},{21,29,31,1},{22,25,29,1},{22,25,31,1},{22,26,28,1},{22,28,30,1},{23,26,27,1},{23,26,29,1},{23,27,28,1},{23,28,30,1},{23,29,30,1},{24,25,26,1},{24,25,29,1},{24,26,30,1},{24,27,31,1},{24,30,31,1},{25,27,30,2},{26,30,31,1}}},
    {24,2,{{0,1,2,3,4,5,6,7,8},{9,10,11,12}},{{0,9,14,1},{0,9,21,1},{0,10,14,1},{0,10,15,1},{0,11,17,1},{0,11,18,1},{0,12,21,1},{0,12,23,1},{0,13,19,1},{0,13,22,1},{0,15,19,1},{0,16,20,1},{0,16,23,1},{0,17,20,1},{0,18,22,1},{1,9,13,1},{1,9,15,1},{1,10,15,1},{1,10,23,1},{1,11,13,1},{1,11,17,1},{1,12,16,1},{1,12,19,1},{1,14,20,1},{1,14,21,1},{1,16,18,1},{1,17,22,1},{1,18,21,1},{1,19,23,1},{1,20,22,1},{2,9,13,1},{2,9,17,1},{2,10,14,1},{2,10,21,1},{2,11,15,1},{2,11,21,1},{2,12,15,1},{2,12,22,1},{2,13,17,1},{2,14,20,1},{2,16,19,1},{2,16,23,1},{2,18,20,1},{2,18,23,1},{2,19,22,1},{3,9,19,1},{3,9,22,1},{3,10,13,1},{3,10,23,1},{3,11,13,1},{3,11,20,1},{3,12,18,1},{3,12,22,1},{3,14,21,1},{3,14,23,1},{3,15,17,1},{3,15,20,1},{3,16,18,1},{3,16,19,1},{3,17,21,1},{4,9,14,1},{4,9,19,1},{4,10,13,1},{4,10,22,1},{4,11,14,1},{4,11,18,1},{4,12,13,1},{4,12,19,1},{4,15,18,1},{4,15,23,1},{4,16,21,1},{4,16,22,1},{4,17,20,1},{4,17,21,1},{4,20,23,1},{5,9,16,1},{5,9,20,1},{5,10,19,1},{5,10,22,1},{5,11,14,1},{5,11,22,1},{5,12,17,1},{5,12,23,1},{5,13,16,1},{5,13,18,1},{5,14,19,1},{5,15,21,1},{5,15,23,1},{5,17,18,1},{5,20,21,1},{6,9,17,1},{6,9,21,1},{6,10,16,1},{6,10,17,1},{6,11,16,1},{6,11,23,1},{6,12,15,1},{6,12,20,1},{6,13,19,1},{6,13,20,1},{6,14,18,1},{6,14,23,1},{6,15,22,1},{6,18,22,1},{6,19,21,1},{7,9,23,2},{7,10,18,1},{7,10,20,1},{7,11,15,1},{7,11,21,1},{7,12,16,1},{7,12,20,1},{7,13,16,1},{7,13,21,1},{7,14,17,1},{7,14,19,1},{7,15,22,1},{7,17,22,1},{7,18,19,1},{8,9,15,1},{8,9,18,1},{8,10,16,1},{8,10,17,1},{8,11,16,1},{8,11,19,1},{8,12,14,1},{8,12,17,1},{8,13,20,1},{8,13,23,1},{8,14,22,1},{8,15,21,1},{8,18,23,1},{8,19,21,1},{8,20,22,1},{9,16,22,1},{9,18,20,1},{10,18,21,1},{10,19,20,1},{11,19,22,1},{11,20,23,1},{12,13,21,1},{12,14,18,1},{13,14,15,1},{13,14,22,1},{13,15,18,1},{13,17,23,1},{14,15,16,1},{14,16,17,1},{15,16,17,1},{15,19,20,1},{16,20,21,1},{17,18,19,1},{17,19,23,1},{21,22,23,2}}},
    {31,2,{{0,1,2,3,4,5,6,7,8,9},{10,11,12,13,14,15,16,17,18}},{{0,10,19,1},{0,10,21,1},{0,11,22,2},{0,12,19,1},{0,12,20,1},{0,13,20,1},{0,13,21,1},{0,14,24,2},{0,15,25,1},{0,15,27,1},{0,16,28,2},{0,17,26,1},{0,17,29,1},{0,18,23,1},{0,18,29,1},{0,23,27,1},{0,25,30,1},{0,26,30,1},{1,10,20,1},{1,10,24,1},{1,11,19,1},{1,11,21,1},{1,12,20,1},{1,12,21,1},{1,13,26,1},{1,13,27,1},{1,14,22,1},{1,14,27,1},{1,15,25,1},{1,15,26,1},{1,16,25,1},{1,16,30,1},{1,17,19,1},{1,17,28,1},{1,18,29,1},{1,18,30,1},{1,22,28,1},{1,23,24,1},{1,23,29,1},{2,10,19,1},{2,10,22,1},{2,11,19,1},{2,11,21,1},{2,12,24,1},{2,12,29,1},{2,13,20,1},{2,13,22,1},{2,14,21,1},{2,14,23,1},{2,15,23,1},{2,15,26,1},{2,16,25,1},{2,16,27,1},{2,17,26,1},{2,17,28,1},{2,18,24,1},{2,18,27,1},{2,20,30,1},{2,25,30,1},{2,28,29,1},{3,10,20,1},{3,10,21,1},{3,11,20,1},{3,11,27,1},{3,12,19,1},{3,12,23,1},{3,13,23,1},{3,13,30,1},{3,14,25,1},{3,14,27,1},{3,15,24,1},{3,15,30,1},{3,16,22,1},{3,16,26,1},{3,17,22,1},{3,17,29,1},{3,18,25,1},{3,18,28,1},{3,19,29,1},{3,21,26,1},{3,24,28,1},{4,10,22,1},{4,10,24,1},{4,11,23,2},{4,12,21,1},{4,12,24,1},{4,13,19,2},{4,14,25,1},{4,14,26,1},{4,15,22,1},{4,15,28,1},{4,16,26,1},{4,16,27,1},{4,17,25,1},{4,17,30,1},{4,18,27,1},{4,18,28,1},{4,20,29,1},{4,20,30,1},{4,21,29,1},{5,10,26,1},{5,10,30,1},{5,11,20,1},{5,11,26,1},{5,12,23,1},{5,12,27,1},{5,13,25,1},{5,13,28,1},{5,14,20,1},{5,14,28,1},{5,15,29,2},{5,16,23,1},{5,16,24,1},{5,17,27,1},{5,17,30,1},{5,18,21,1},{5,18,22,1},{5,19,21,1},{5,19,25,1},{5,22,24,1},{6,10,23,1},{6,10,28,1},{6,11,24,2},{6,12,22,1},{6,12,25,1},{6,13,25,1},{6,13,28,1},{6,14,20,1},{6,14,29,1},{6,15,27,1},{6,15,30,1},{6,16,21,1},{6,16,29,1},{6,17,20,1},{6,17,22,1},{6,18,26,2},{6,19,27,1},{6,19,30,1},{6,21,23,1},{7,10,23,1},{7,10,25,1},{7,11,25,1},{7,11,26,1},{7,12,22,1},{7,12,28,1},{7,13,22,1},{7,13,24,1},{7,14,19,1},{7,14,28,1},{7,15,23,1},{7,15,24,1},{7,16,19,1},{7,16,21,1},{7,17,20,1},{7,17,27,1},{7,18,20,1},{7,18,30,1},{7,21,29,1},{7,26,30,1},{7,27,29,1},{8,10,25,1},{8,10,26,1},{8,11,25,1},{8,11,28,1},{8,12,27,1},{8,12,30,1},{8,13,21,1},{8,13,27,1},{8,14,19,1},{8,14,23,1},{8,15,20,1},{8,15,28,1},{8,16,23,1},{8,16,29,1},{8,17,19,1},{8,17,24,1},{8,18,22,1},{8,18,24,1},{8,20,26,1},{8,21,30,1},{8,22,29,1},{9,10,28,1},{9,10,29,1},{9,11,27,1},{9,11,30,1},{9,12,25,1},{9,12,26,1},{9,13,23,1},{9,13,26,1},{9,14,29,1},{9,14,30,1},{9,15,19,2},{9,16,20,2},{9,17,21,2},{9,18,23,1},{9,18,25,1},{9,22,24,1},{9,22,27,1},{9,24,28,1},{10,27,29,1},{10,27,30,1},{11,28,29,1},{11,29,30,1},{12,26,29,1},{12,28,30,1},{13,24,29,1},{13,29,30,1},{14,21,26,1},{14,22,30,1},{15,20,21,1},{15,21,22,1},{16,19,22,1},{16,24,30,1},{17,23,24,1},{17,23,25,1},{18,19,20,1},{18,19,21,1},{19,20,22,1},{19,23,25,1},{19,23,26,1},{19,24,26,1},{19,24,29,1},{19,27,28,1},{19,28,30,1},{20,21,22,1},{20,23,28,1},{20,23,29,1},{20,24,25,2},{20,26,27,1},{20,27,28,1},{21,23,28,1},{21,24,27,1},{21,24,30,1},{21,25,27,1},{21,25,28,1},{22,23,26,1},{22,23,30,1},{22,25,27,1},{22,25,29,1},{22,26,28,1},{23,27,30,1},{24,26,27,1},{25,26,28,1},{25,26,29,1}}},
    {11,2,{{0,1,2},{3,4}},{{0,3,5,2},{0,4,6,2},{0,7,8,2},{0,9,10,2},{1,3,9,1},{1,3,10,1},{1,4,7,1},{1,4,10,1},{1,5,6,1},{1,5,7,1},{1,6,8,1},{1,8,9,1},{2,3,6,1},{2,3,8,1},{2,4,8,1},{2,4,9,1},{2,5,7,1},{2,5,9,1},{2,6,10,1},{2,7,10,1},{3,6,7,1},{3,7,10,1},{3,8,9,1},{4,5,8,1},{4,5,10,1},{4,7,9,1},{5,6,9,1},{5,8,10,1},{6,7,9,1},{6,8,10,1}}},
    {19,2,{{0,1,2,3,4,5},{6,7,8,9}},{{0,6,10,1},{0,6,11,1},{0,7,16,1},{0,7,18,1},{0,8,17,2},{0,9,11,1},{0,9,13,1},{0,10,13,1},{0,12,15,1},{0,12,16,1},{0,14,15,1},{0,14,18,1},{1,6,10,1},{1,6,12,1},{1,7,12,1},{1,7,14,1},{1,8,14,1},{1,8,16,1},{1,9,15,1},{1,9,18,1},{1,10,18,1},{1,11,13,1},{1,11,15,1},{1,13,17,1},{1,16,17,1},{2,6,15,1},{2,6,16,1},{2,7,13,2},{2,8,12,1},{2,8,15,1},{2,9,14,1},{2,9,17,1},{2,10,17,1},{2,10,18,1},{2,11,14,1},{2,11,16,1},{2,12,18,1},{3,6,11,1},{3,6,18,1},{3,7,16,1},{3,7,18,1},{3,8,13,1},{3,8,15,1},{3,9,14,1},{3,9,17,1},{3,10,12,1},{3,10,17,1},{3,11,14,1},{3,12,15,1},{3,13,16,1},{4,6,12,1},{4,6,15,1},{4,7,10,2},{4,8,11,1},{4,8,18,1},{4,9,12,1},{4,9,18,1},{4,11,16,1},{4,13,16,1},{4,13,17,1},{4,14,15,1},{4,14,17,1},{5,6,17,2},{5,7,14,1},{5,7,15,1},{5,8,10,2},{5,9,11,1},{5,9,13,1},{5,11,12,1},{5,12,13,1},{5,14,18,1},{5,15,16,1},{5,16,18,1},{6,13,14,2},{6,16,18,1},{7,11,12,1},{7,11,17,1},{7,15,17,1},{8,11,18,1},{8,12,13,1},{8,14,16,1},{9,10,15,1},{9,10,16,1},{9,12,16,1},{10,11,13,1},{10,11,15,1},{10,12,14,1},{10,14,16,1},{11,17,18,1},{12,14,17,1},{12,17,18,1},{13,15,18,2},{15,16,17,1}}},
    {21,2,{{0,1,2,3,4,5,6},{7,8,9,10}},{{0,7,12,1},{0,7,19,1},{0,8,14,1},{0,8,20,1},{0,9,15,1},{0,9,19,1},{0,10,18,1},{0,10,20,1},{0,11,17,1},{0,11,18,1},{0,12,15,1},{0,13,16,1},{0,13,17,1},{0,14,16,1},{1,7,18,1},{1,7,20,1},{1,8,14,1},{1,8,16,1},{1,9,17,1},{1,9,20,1},{1,10,13,1},{1,10,18,1},{1,11,16,1},{1,11,19,1},{1,12,14,1},{1,12,15,1},{1,13,19,1},{1,15,17,1},{2,7,14,1},{2,7,18,1},{2,8,11,1},{2,8,12,1},{2,9,17,1},{2,9,18,1},{2,10,14,1},{2,10,20,1},{2,11,15,1},{2,12,20,1},{2,13,15,1},{2,13,17,1},{2,16,19,2},{3,7,11,1},{3,7,15,1},{3,8,13,1},{3,8,18,1},{3,9,11,1},{3,9,14,1},{3,10,15,1},{3,10,17,1},{3,12,18,1},{3,12,19,1},{3,13,16,1},{3,14,19,1},{3,16,20,1},{3,17,20,1},{4,7,11,1},{4,7,16,1},{4,8,13,1},{4,8,17,1},{4,9,15,1},{4,9,20,1},{4,10,14,1},{4,10,17,1},{4,11,16,1},{4,12,18,1},{4,12,19,1},{4,13,14,1},{4,15,20,1},{4,18,19,1},{5,7,16,1},{5,7,19,1},{5,8,17,1},{5,8,20,1},{5,9,11,1},{5,9,13,1},{5,10,12,1},{5,10,16,1},{5,11,15,1},{5,12,20,1},{5,13,19,1},{5,14,15,1},{5,14,18,1},{5,17,18,1},{6,7,17,1},{6,7,20,1},{6,8,11,1},{6,8,19,1},{6,9,16,1},{6,9,18,1},{6,10,12,1},{6,10,19,1},{6,11,12,1},{6,13,14,1},{6,13,18,1},{6,14,15,1},{6,15,20,1},{6,16,17,1},{7,12,13,1},{7,13,15,1},{7,14,17,1},{8,12,16,1},{8,15,18,1},{8,15,19,1},{9,12,13,1},{9,12,16,1},{9,14,19,1},{10,11,13,1},{10,11,19,1},{10,15,16,1},{11,12,17,1},{11,13,20,1},{11,14,18,1},{11,14,20,1},{12,14,17,1},{13,18,20,1},{14,16,20,1},{15,16,18,1},{15,17,19,1},{16,17,18,1},{17,19,20,1},{18,19,20,1}}},
    {23,2,{{0,1,2,3,4,5,6,7},{8,9,10,11}},{{0,8,14,1},{0,8,17,1},{0,9,13,1},{0,9,20,1},{0,10,13,1},{0,10,18,1},{0,11,16,1},{0,11,19,1},{0,12,17,1},{0,12,21,1},{0,14,19,1},{0,15,20,1},{0,15,22,1},{0,16,21,1},{0,18,22,1},{1,8,15,1},{1,8,16,1},{1,9,19,1},{1,9,21,1},{1,10,18,1},{1,10,21,1},{1,11,13,1},{1,11,15,1},{1,12,16,1},{1,12,20,1},{1,13,22,1},{1,14,17,1},{1,14,18,1},{1,17,19,1},{1,20,22,1},{2,8,17,1},{2,8,20,1},{2,9,12,1},{2,9,16,1},{2,10,20,1},{2,10,21,1},{2,11,15,1},{2,11,22,1},{2,12,15,1},{2,13,19,1},{2,13,21,1},{2,14,18,1},{2,14,19,1},{2,16,22,1},{2,17,18,1},{3,8,19,1},{3,8,21,1},{3,9,20,1},{3,9,21,1},{3,10,14,1},{3,10,17,1},{3,11,12,1},{3,11,13,1},{3,12,18,1},{3,13,18,1},{3,14,22,1},{3,15,17,1},{3,15,22,1},{3,16,19,1},{3,16,20,1},{4,8,14,1},{4,8,18,1},{4,9,13,1},{4,9,22,1},{4,10,14,1},{4,10,17,1},{4,11,17,1},{4,11,21,1},{4,12,15,1},{4,12,22,1},{4,13,18,1},{4,15,21,1},{4,16,19,1},{4,16,20,1},{4,19,20,1},{5,8,15,1},{5,8,20,1},{5,9,14,1},{5,9,16,1},{5,10,19,1},{5,10,22,1},{5,11,12,1},{5,11,19,1},{5,12,21,1},{5,13,15,1},{5,13,16,1},{5,14,20,1},{5,17,18,1},{5,17,22,1},{5,18,21,1},{6,8,18,1},{6,8,21,1},{6,9,12,1},{6,9,14,1},{6,10,16,1},{6,10,19,1},{6,11,17,1},{6,11,18,1},{6,12,20,1},{6,13,20,1},{6,13,22,1},{6,14,22,1},{6,15,19,1},{6,15,21,1},{6,16,17,1},{7,8,22,2},{7,9,17,1},{7,9,19,1},{7,10,12,1},{7,10,20,1},{7,11,16,1},{7,11,18,1},{7,12,14,1},{7,13,17,1},{7,13,21,1},{7,14,15,1},{7,15,19,1},{7,16,18,1},{7,20,21,1},{8,12,13,1},{8,12,16,1},{8,13,19,1},{9,15,17,1},{9,15,18,1},{9,18,22,1},{10,12,22,1},{10,13,15,1},{10,15,16,1},{11,14,20,1},{11,14,21,1},{11,20,22,1},{12,13,14,1},{12,17,19,1},{12,18,19,1},{13,14,16,1},{13,17,20,1},{14,15,16,1},{14,17,21,1},{15,18,20,1},{16,17,22,1},{16,18,21,1},{17,20,21,1},{18,19,20,1},{19,21,22,2}}},
    {26,2,{{0,1,2,3,4,5,6,7},{8,9,10,11,12,13,14}},{{0,8,15,1},{0,8,23,1},{0,9,16,1},{0,9,25,1},{0,10,16,1},{0,10,18,1},{0,11,15,1},{0,11,23,1},{0,12,19,1},{0,12,20,1},{0,13,19,1},{0,13,21,1},{0,14,20,1},{0,14,24,1},{0,17,21,1},{0,17,25,1},{0,18,22,1},{0,22,24,1},{1,8,15,1},{1,8,22,1},{1,9,20,1},{1,9,25,1},{1,10,15,1},{1,10,17,1},{1,11,18,1},{1,11,25,1},{1,12,19,1},{1,12,21,1},{1,13,23,1},{1,13,24,1},{1,14,23,1},{1,14,24,1},{1,16,20,1},{1,16,22,1},{1,17,18,1},{1,19,21,1},{2,8,16,1},{2,8,20,1},{2,9,16,1},{2,9,17,1},{2,10,17,1},{2,10,21,1},{2,11,21,1},{2,11,24,1},{2,12,23,1},{2,12,25,1},{2,13,18,1},{2,13,20,1},{2,14,15,1},{2,14,22,1},{2,15,18,1},{2,19,24,1},{2,19,25,1},{2,22,23,1},{3,8,16,1},{3,8,17,1},{3,9,15,1},{3,9,19,1},{3,10,15,1},{3,10,16,1},{3,11,20,1},{3,11,21,1},{3,12,22,1},{3,12,23,1},{3,13,25,2},{3,14,18,1},{3,14,19,1},{3,17,23,1},{3,18,21,1},{3,20,24,1},{3,22,24,1},{4,8,17,1},{4,8,19,1},{4,9,15,1},{4,9,18,1},{4,10,23,1},{4,10,24,1},{4,11,15,1},{4,11,20,1},{4,12,16,1},{4,12,20,1},{4,13,21,1},{4,13,22,1},{4,14,23,1},{4,14,25,1},{4,16,18,1},{4,17,19,1},{4,21,24,1},{4,22,25,1},{5,8,18,1},{5,8,19,1},{5,9,19,1},{5,9,20,1},{5,10,18,1},{5,10,24,1},{5,11,16,1},{5,11,23,1},{5,12,16,1},{5,12,25,1},{5,13,17,1},{5,13,22,1},{5,14,21,1},{5,14,22,1},{5,15,20,1},{5,15,24,1},{5,17,21,1},{5,23,25,1},{6,8,18,1},{6,8,25,1},{6,9,18,1},{6,9,21,1},{6,10,23,1},{6,10,25,1},{6,11,19,1},{6,11,24,1},{6,12,17,1},{6,12,22,1},{6,13,20,1},{6,13,23,1},{6,14,17,1},{6,14,21,1},{6,15,19,1},{6,15,20,1},{6,16,22,1},{6,16,24,1},{7,8,20,1},{7,8,24,1},{7,9,21,1},{7,9,24,1},{7,10,19,1},{7,10,21,1},{7,11,19,1},{7,11,22,1},{7,12,15,2},{7,13,16,2},{7,14,17,1},{7,14,18,1},{7,17,18,1},{7,20,23,1},{7,22,25,1},{7,23,25,1},{8,21,22,1},{8,21,23,1},{8,24,25,1},{9,17,22,1},{9,22,23,1},{9,23,24,1},{10,19,22,1},{10,20,22,1},{10,20,25,1},{11,16,17,1},{11,17,22,1},{11,18,25,1},{12,17,24,1},{12,18,21,1},{12,18,24,1},{13,15,17,1},{13,15,18,1},{13,19,24,1},{14,15,16,1},{14,16,19,1},{14,20,25,1},{15,16,23,1},{15,17,23,1},{15,19,22,1},{15,21,22,1},{15,21,25,1},{15,24,25,1},{16,17,20,1},{16,18,25,1},{16,19,23,1},{16,21,24,1},{16,21,25,1},{17,19,25,1},{17,20,24,1},{18,19,20,1},{18,19,23,1},{18,20,22,1},{18,23,24,1},{19,20,21,1},{20,21,23,1}}},
    {29,2,{{0,1,2,3,4,5,6,7,8},{9,10,11,12,13,14,15,16}},{{0,9,17,1},{0,9,22,1},{0,10,17,1},{0,10,23,1},{0,11,19,1},{0,11,24,1},{0,12,19,1},{0,12,28,1},{0,13,25,1},{0,13,28,1},{0,14,21,1},{0,14,24,1},{0,15,20,1},{0,15,23,1},{0,16,20,1},{0,16,22,1},{0,18,25,1},{0,18,27,1},{0,21,26,1},{0,26,27,1},{1,9,18,1},{1,9,26,1},{1,10,17,1},{1,10,18,1},{1,11,20,1},{1,11,28,1},{1,12,19,1},{1,12,20,1},{1,13,17,1},{1,13,19,1},{1,14,24,1},{1,14,25,1},{1,15,26,1},{1,15,27,1},{1,16,22,1},{1,16,23,1},{1,21,23,1},{1,21,27,1},{1,22,28,1},{1,24,25,1},{2,9,21,1},{2,9,27,1},{2,10,18,1},{2,10,21,1},{2,11,19,1},{2,11,22,1},{2,12,17,1},{2,12,23,1},{2,13,18,1},{2,13,19,1},{2,14,22,1},{2,14,27,1},{2,15,23,1},{2,15,26,1},{2,16,17,1},{2,16,25,1},{2,20,24,1},{2,20,26,1},{2,24,28,1},{2,25,28,1},{3,9,17,1},{3,9,18,1},{3,10,19,1},{3,10,26,1},{3,11,27,1},{3,11,28,1},{3,12,17,1},{3,12,26,1},{3,13,21,1},{3,13,22,1},{3,14,18,1},{3,14,19,1},{3,15,22,1},{3,15,24,1},{3,16,20,1},{3,16,27,1},{3,20,23,1},{3,21,25,1},{3,23,25,1},{3,24,28,1},{4,9,23,1},{4,9,25,1},{4,10,19,1},{4,10,25,1},{4,11,22,1},{4,11,27,1},{4,12,23,1},{4,12,27,1},{4,13,20,1},{4,13,24,1},{4,14,21,1},{4,14,26,1},{4,15,22,1},{4,15,28,1},{4,16,17,1},{4,16,21,1},{4,17,20,1},{4,18,24,1},{4,18,26,1},{4,19,28,1},{5,9,19,1},{5,9,27,1},{5,10,22,1},{5,10,28,1},{5,11,17,1},{5,11,20,1},{5,12,26,1},{5,12,28,1},{5,13,17,1},{5,13,20,1},{5,14,25,1},{5,14,26,1},{5,15,19,1},{5,15,24,1},{5,16,23,1},{5,16,27,1},{5,18,23,1},{5,18,24,1},{5,21,22,1},{5,21,25,1},{6,9,19,1},{6,9,28,1},{6,10,21,1},{6,10,23,1},{6,11,18,1},{6,11,23,1},{6,12,22,1},{6,12,24,1},{6,13,21,1},{6,13,24,1},{6,14,17,1},{6,14,22,1},{6,15,20,1},{6,15,25,1},{6,16,25,1},{6,16,28,1},{6,17,26,1},{6,18,20,1},{6,19,27,1},{6,26,27,1},{7,9,20,2},{7,10,22,1},{7,10,25,1},{7,11,17,1},{7,11,21,1},{7,12,18,1},{7,12,22,1},{7,13,23,1},{7,13,26,1},{7,14,23,1},{7,14,27,1},{7,15,21,1},{7,15,25,1},{7,16,24,1},{7,16,28,1},{7,17,24,1},{7,18,28,1},{7,19,26,1},{7,19,27,1},{8,9,23,1},{8,9,24,1},{8,10,20,1},{8,10,27,1},{8,11,18,1},{8,11,25,1},{8,12,20,1},{8,12,21,1},{8,13,23,1},{8,13,26,1},{8,14,28,2},{8,15,21,1},{8,15,27,1},{8,16,24,1},{8,16,26,1},{8,17,19,1},{8,17,25,1},{8,18,22,1},{8,19,22,1},{9,21,22,1},{9,24,25,1},{9,26,28,1},{10,20,24,1},{10,24,26,1},{10,27,28,1},{11,21,23,1},{11,24,26,1},{11,25,26,1},{12,18,25,1},{12,21,24,1},{12,25,27,1},{13,18,22,1},{13,25,27,1},{13,27,28,1},{14,17,18,1},{14,19,20,1},{14,20,23,1},{15,17,18,1},{15,17,19,1},{15,18,28,1},{16,18,19,2},{16,21,26,1},{17,20,21,1},{17,21,28,1},{17,22,25,1},{17,22,26,1},{17,23,27,1},{17,23,28,1},{17,24,27,1},{18,20,21,1},{18,21,27,1},{18,23,26,1},{19,20,25,1},{19,21,24,1},{19,21,28,1},{19,22,24,1},{19,23,25,1},{19,23,26,1},{20,22,27,2},{20,25,28,1},{20,26,28,1},{22,23,24,1},{22,23,28,1},{22,25,26,1},{23,24,27,1}}},
    {27,2,{{0,1,2,3,4,5,6,7,8,9},{10,11,12,13}},{{0,10,14,1},{0,10,26,1},{0,11,21,1},{0,11,25,1},{0,12,15,1},{0,12,22,1},{0,13,15,1},{0,13,23,1},{0,14,21,1},{0,16,18,1},{0,16,25,1},{0,17,18,1},{0,17,23,1},{0,19,24,2},{0,20,22,1},{0,20,26,1},{1,10,15,1},{1,10,24,1},{1,11,14,1},{1,11,19,1},{1,12,16,1},{1,12,24,1},{1,13,19,1},{1,13,21,1},{1,14,22,1},{1,15,22,1},{1,16,23,1},{1,17,20,2},{1,18,25,2},{1,21,26,1},{1,23,26,1},{2,10,20,1},{2,10,23,1},{2,11,15,1},{2,11,17,1},{2,12,22,1},{2,12,23,1},{2,13,19,1},{2,13,24,1},{2,14,21,1},{2,14,26,1},{2,15,22,1},{2,16,19,1},{2,16,25,1},{2,17,24,1},{2,18,20,1},{2,18,26,1},{2,21,25,1},{3,10,14,1},{3,10,21,1},{3,11,14,1},{3,11,25,1},{3,12,18,1},{3,12,24,1},{3,13,23,1},{3,13,26,1},{3,15,17,1},{3,15,20,1},{3,16,17,1},{3,16,23,1},{3,18,26,1},{3,19,21,1},{3,19,22,1},{3,20,22,1},{3,24,25,1},{4,10,15,1},{4,10,16,1},{4,11,17,1},{4,11,20,1},{4,12,20,1},{4,12,21,1},{4,13,18,1},{4,13,22,1},{4,14,23,1},{4,14,24,1},{4,15,25,1},{4,16,26,1},{4,17,19,1},{4,18,24,1},{4,19,26,1},{4,21,23,1},{4,22,25,1},{5,10,16,1},{5,10,23,1},{5,11,15,1},{5,11,22,1},{5,12,18,1},{5,12,20,1},{5,13,16,1},{5,13,26,1},{5,14,18,1},{5,14,26,1},{5,15,23,1},{5,17,24,1},{5,17,25,1},{5,19,20,1},{5,19,22,1},{5,21,24,1},{5,21,25,1},{6,10,19,2},{6,11,20,1},{6,11,21,1},{6,12,21,1},{6,12,23,1},{6,13,20,1},{6,13,25,1},{6,14,18,1},{6,14,25,1},{6,15,24,1},{6,15,26,1},{6,16,22,1},{6,16,24,1},{6,17,22,1},{6,17,26,1},{6,18,23,1},{7,10,17,1},{7,10,18,1},{7,11,22,1},{7,11,26,1},{7,12,25,1},{7,12,26,1},{7,13,16,1},{7,13,18,1},{7,14,20,1},{7,14,24,1},{7,15,21,1},{7,15,24,1},{7,16,21,1},{7,17,22,1},{7,19,23,1},{7,19,25,1},{7,20,23,1},{8,10,20,1},{8,10,26,1},{8,11,16,1},{8,11,24,1},{8,12,16,1},{8,12,19,1},{8,13,20,1},{8,13,22,1},{8,14,22,1},{8,14,23,1},{8,15,18,1},{8,15,23,1},{8,17,19,1},{8,17,25,1},{8,18,21,1},{8,21,24,1},{8,25,26,1},{9,10,17,1},{9,10,18,1},{9,11,16,1},{9,11,18,1},{9,12,14,2},{9,13,15,1},{9,13,24,1},{9,15,21,1},{9,16,19,1},{9,17,21,1},{9,19,23,1},{9,20,24,1},{9,20,25,1},{9,22,26,2},{9,23,25,1},{10,21,22,1},{10,22,25,1},{10,24,25,1},{11,18,19,1},{11,23,24,1},{11,23,26,1},{12,15,17,1},{12,17,26,1},{12,19,25,1},{13,14,17,1},{13,14,25,1},{13,17,21,1},{14,15,16,1},{14,15,19,1},{14,16,17,1},{14,19,20,1},{15,16,20,1},{15,18,19,1},{15,25,26,1},{16,18,22,1},{16,20,21,1},{16,24,26,1},{17,18,23,1},{18,20,21,1},{18,22,24,1},{19,21,26,1},{20,23,25,1},{20,24,26,1},{21,22,23,1},{22,23,24,1}}},
    {30,2,{{0,1,2,3,4,5,6,7,8,9},{10,11,12,13,14,15,16}},{{0,10,17,1},{0,10,21,1},{0,11,17,1},{0,11,28,1},{0,12,21,1},{0,12,23,1},{0,13,18,1},{0,13,27,1},{0,14,19,2},{0,15,20,1},{0,15,23,1},{0,16,22,1},{0,16,25,1},{0,18,28,1},{0,20,29,1},{0,22,27,1},{0,24,25,1},{0,24,26,1},{0,26,29,1},{1,10,17,1},{1,10,23,1},{1,11,18,1},{1,11,21,1},{1,12,18,1},{1,12,22,1},{1,13,19,1},{1,13,29,1},{1,14,17,1},{1,14,21,1},{1,15,23,1},{1,15,24,1},{1,16,25,1},{1,16,27,1},{1,19,26,1},{1,20,25,1},{1,20,27,1},{1,22,29,1},{1,24,28,1},{1,26,28,1},{2,10,18,1},{2,10,25,1},{2,11,17,1},{2,11,23,1},{2,12,21,1},{2,12,26,1},{2,13,17,1},{2,13,22,1},{2,14,18,1},{2,14,21,1},{2,15,24,1},{2,15,25,1},{2,16,23,1},{2,16,27,1},{2,19,26,1},{2,19,28,1},{2,20,22,1},{2,20,24,1},{2,27,29,1},{2,28,29,1},{3,10,18,1},{3,10,19,1},{3,11,28,1},{3,11,29,1},{3,12,17,1},{3,12,25,1},{3,13,17,1},{3,13,18,1},{3,14,24,1},{3,14,25,1},{3,15,27,1},{3,15,28,1},{3,16,20,1},{3,16,24,1},{3,19,23,1},{3,20,23,1},{3,21,27,1},{3,21,29,1},{3,22,26,2},{4,10,20,1},{4,10,28,1},{4,11,26,1},{4,11,29,1},{4,12,17,1},{4,12,18,1},{4,13,20,1},{4,13,21,1},{4,14,17,1},{4,14,22,1},{4,15,25,1},{4,15,27,1},{4,16,22,1},{4,16,23,1},{4,18,24,1},{4,19,24,1},{4,19,28,1},{4,21,25,1},{4,23,26,1},{4,27,29,1},{5,10,21,1},{5,10,29,1},{5,11,18,1},{5,11,25,1},{5,12,20,1},{5,12,29,1},{5,13,19,1},{5,13,25,1},{5,14,20,1},{5,14,27,1},{5,15,21,1},{5,15,26,1},{5,16,24,1},{5,16,26,1},{5,17,24,1},{5,17,27,1},{5,18,23,1},{5,19,23,1},{5,22,28,2},{6,10,19,1},{6,10,25,1},{6,11,19,1},{6,11,22,1},{6,12,20,1},{6,12,22,1},{6,13,21,1},{6,13,23,1},{6,14,18,1},{6,14,24,1},{6,15,26,1},{6,15,28,1},{6,16,26,1},{6,16,29,1},{6,17,24,1},{6,17,28,1},{6,18,27,1},{6,20,27,1},{6,21,29,1},{6,23,25,1},{7,10,20,1},{7,10,24,1},{7,11,19,1},{7,11,25,1},{7,12,23,1},{7,12,24,1},{7,13,20,1},{7,13,26,1},{7,14,22,1},{7,14,27,1},{7,15,19,1},{7,15,29,1},{7,16,21,1},{7,16,28,1},{7,17,22,1},{7,17,25,1},{7,18,26,1},{7,18,28,1},{7,21,27,1},{7,23,29,1},{8,10,24,1},{8,10,26,1},{8,11,20,1},{8,11,26,1},{8,12,25,1},{8,12,27,1},{8,13,28,1},{8,13,29,1},{8,14,23,1},{8,14,25,1},{8,15,17,1},{8,15,18,1},{8,16,19,1},{8,16,28,1},{8,17,22,1},{8,18,20,1},{8,19,27,1},{8,21,23,1},{8,21,24,1},{8,22,29,1},{9,10,22,2},{9,11,20,1},{9,11,23,1},{9,12,24,1},{9,12,28,1},{9,13,24,1},{9,13,27,1},{9,14,28,1},{9,14,29,1},{9,15,20,1},{9,15,21,1},{9,16,21,1},{9,16,29,1},{9,17,19,1},{9,17,27,1},{9,18,19,1},{9,18,23,1},{9,25,26,2},{10,23,27,1},{10,26,27,1},{10,28,29,1},{11,21,22,1},{11,24,27,2},{12,19,27,1},{12,19,29,1},{12,26,28,1},{13,22,23,1},{13,24,26,1},{13,25,28,1},{14,20,26,1},{14,23,28,1},{14,26,29,1},{15,17,29,1},{15,18,22,1},{15,19,22,1},{16,17,18,2},{16,19,20,1},{17,19,20,1},{17,20,28,1},{17,21,23,1},{17,21,26,1},{17,23,26,1},{17,25,29,1},{18,19,21,1},{18,20,25,1},{18,21,22,1},{18,24,29,1},{18,25,29,1},{18,26,27,1},{19,21,25,1},{19,22,25,1},{19,24,29,1},{20,21,26,1},{20,21,28,1},{20,22,24,1},{20,23,29,1},{21,24,28,1},{22,23,24,1},{22,25,27,1},{23,24,25,1},{23,27,28,1},{25,27,28,1}}},
    {29,2,{{0,1,2,3,4,5,6,7,8,9,10},{11,12,13,14}},{{0,11,15,1},{0,11,24,1},{0,12,15,1},{0,12,25,1},{0,13,20,1},{0,13,28,1},{0,14,22,1},{0,14,28,1},{0,16,22,1},{0,16,25,1},{0,17,21,1},{0,17,26,1},{0,18,23,1},{0,18,24,1},{0,19,21,1},{0,19,26,1},{0,20,27,1},{0,23,27,1},{1,11,20,1},{1,11,28,1},{1,12,16,1},{1,12,17,1},{1,13,15,2},{1,14,22,1},{1,14,24,1},{1,16,25,1},{1,17,23,1},{1,18,20,1},{1,18,26,1},{1,19,22,1},{1,19,24,1},{1,21,25,1},{1,21,27,1},{1,23,27,1},{1,26,28,1},{2,11,22,1},{2,11,24,1},{2,12,15,1},{2,12,20,1},{2,13,21,1},{2,13,24,1},{2,14,16,1},{2,14,19,1},{2,15,20,1},{2,16,26,1},{2,17,25,1},{2,17,28,1},{2,18,23,1},{2,18,27,1},{2,19,21,1},{2,22,27,1},{2,23,28,1},{2,25,26,1},{3,11,15,1},{3,11,22,1},{3,12,16,1},{3,12,27,1},{3,13,17,1},{3,13,21,1},{3,14,15,1},{3,14,26,1},{3,16,24,1},{3,17,25,1},{3,18,24,1},{3,18,27,1},{3,19,23,1},{3,19,28,1},{3,20,21,1},{3,20,23,1},{3,22,28,1},{3,25,26,1},{4,11,21,1},{4,11,28,1},{4,12,17,1},{4,12,28,1},{4,13,20,1},{4,13,22,1},{4,14,20,1},{4,14,27,1},{4,15,18,1},{4,15,27,1},{4,16,24,1},{4,16,26,1},{4,17,23,1},{4,18,22,1},{4,19,23,1},{4,19,25,1},{4,21,25,1},{4,24,26,1},{5,11,27,2},{5,12,18,1},{5,12,26,1},{5,13,19,1},{5,13,25,1},{5,14,24,1},{5,14,26,1},{5,15,22,1},{5,15,25,1},{5,16,21,1},{5,16,23,1},{5,17,21,1},{5,17,28,1},{5,18,20,1},{5,19,22,1},{5,20,28,1},{5,23,24,1},{6,11,16,1},{6,11,18,1},{6,12,18,1},{6,12,20,1},{6,13,19,1},{6,13,26,1},{6,14,17,1},{6,14,25,1},{6,15,23,1},{6,15,27,1},{6,16,28,1},{6,17,24,1},{6,19,28,1},{6,20,22,1},{6,21,23,1},{6,21,24,1},{6,22,26,1},{6,25,27,1},{7,11,16,1},{7,11,17,1},{7,12,19,2},{7,13,16,1},{7,13,22,1},{7,14,21,1},{7,14,27,1},{7,15,24,2},{7,17,26,1},{7,18,22,1},{7,18,26,1},{7,20,25,1},{7,20,27,1},{7,21,28,1},{7,23,25,1},{7,23,28,1},{8,11,17,1},{8,11,26,1},{8,12,26,1},{8,12,27,1},{8,13,24,1},{8,13,25,1},{8,14,17,1},{8,14,18,1},{8,15,19,1},{8,15,23,1},{8,16,23,1},{8,16,27,1},{8,18,19,1},{8,20,24,1},{8,20,25,1},{8,21,22,1},{8,21,28,1},{8,22,28,1},{9,11,20,1},{9,11,21,1},{9,12,24,1},{9,12,25,1},{9,13,23,1},{9,13,28,1},{9,14,23,1},{9,14,25,1},{9,15,22,1},{9,15,26,1},{9,16,17,1},{9,16,27,1},{9,17,24,1},{9,18,21,1},{9,18,28,1},{9,19,26,1},{9,19,27,1},{9,20,22,1},{10,11,19,1},{10,11,25,1},{10,12,22,1},{10,12,28,1},{10,13,23,1},{10,13,27,1},{10,14,23,1},{10,14,28,1},{10,15,16,1},{10,15,21,1},{10,16,18,1},{10,17,20,1},{10,17,27,1},{10,18,25,1},{10,19,24,1},{10,20,26,1},{10,21,22,1},{10,24,26,1},{11,18,19,1},{11,23,25,1},{11,23,26,1},{12,21,23,1},{12,21,24,1},{12,22,23,1},{13,16,18,1},{13,17,18,1},{13,26,27,1},{14,15,20,1},{14,16,19,1},{14,18,21,1},{15,16,21,1},{15,17,18,1},{15,17,19,1},{15,25,28,1},{15,26,28,1},{16,17,22,1},{16,19,20,1},{16,20,28,1},{17,19,20,1},{17,22,27,1},{18,25,28,1},{19,25,27,1},{20,21,26,1},{20,23,24,1},{21,26,27,1},{22,23,26,1},{22,24,25,2},{24,27,28,2}}},
    {35,2,{{0,1,2,3,4,5,6,7,8,9,10},{11,12,13,14,15,16,17,18,19,20}},{{0,11,21,1},{0,11,22,1},{0,12,22,1},{0,12,24,1},{0,13,21,1},{0,13,26,1},{0,14,23,1},{0,14,25,1},{0,15,24,1},{0,15,25,1},{0,16,27,1},{0,16,32,1},{0,17,26,1},{0,17,34,1},{0,18,31,1},{0,18,32,1},{0,19,29,1},{0,19,30,1},{0,20,29,1},{0,20,30,1},{0,23,31,1},{0,27,34,1},{0,28,33,2},{1,11,21,1},{1,11,28,1},{1,12,22,1},{1,12,27,1},{1,13,21,1},{1,13,22,1},{1,14,25,1},{1,14,34,1},{1,15,29,1},{1,15,30,1},{1,16,26,2},{1,17,23,1},{1,17,28,1},{1,18,31,1},{1,18,34,1},{1,19,32,1},{1,19,33,1},{1,20,29,1},{1,20,31,1},{1,23,27,1},{1,24,30,1},{1,24,33,1},{1,25,32,1},{2,11,22,1},{2,11,23,1},{2,12,23,1},{2,12,25,1},{2,13,22,1},{2,13,26,1},{2,14,21,1},{2,14,26,1},{2,15,24,1},{2,15,27,1},{2,16,24,1},{2,16,27,1},{2,17,25,1},{2,17,34,1},{2,18,32,1},{2,18,33,1},{2,19,30,1},{2,19,32,1},{2,20,31,1},{2,20,33,1},{2,21,29,1},{2,28,29,1},{2,28,31,1},{2,30,34,1},{3,11,23,1},{3,11,34,1},{3,12,21,2},{3,13,23,1},{3,13,24,1},{3,14,22,1},{3,14,24,1},{3,15,25,1},{3,15,30,1},{3,16,22,1},{3,16,28,1},{3,17,32,1},{3,17,33,1},{3,18,27,2},{3,19,26,1},{3,19,29,1},{3,20,33,1},{3,20,34,1},{3,25,28,1},{3,26,31,1},{3,29,32,1},{3,30,31,1},{4,11,24,1},{4,11,29,1},{4,12,23,1},{4,12,26,1},{4,13,23,1},{4,13,30,1},{4,14,21,1},{4,14,28,1},{4,15,22,1},{4,15,27,1},{4,16,32,1},{4,16,34,1},{4,17,22,1},{4,17,27,1},{4,18,26,1},{4,18,29,1},{4,19,25,1},{4,19,33,1},{4,20,25,1},{4,20,32,1},{4,21,31,1},{4,24,31,1},{4,28,34,1},{4,30,33,1},{5,11,24,1},{5,11,29,1},{5,12,24,1},{5,12,28,1},{5,13,25,2},{5,14,22,1},{5,14,28,1},{5,15,22,1},{5,15,26,1},{5,16,21,1},{5,16,29,1},{5,17,27,1},{5,17,33,1},{5,18,33,1},{5,18,34,1},{5,19,26,1},{5,19,27,1},{5,20,30,1},{5,20,32,1},{5,21,34,1},{5,23,30,1},{5,23,31,1},{5,31,32,1},{6,11,25,2},{6,12,26,1},{6,12,29,1},{6,13,24,1},{6,13,27,1},{6,14,23,1},{6,14,26,1},{6,15,28,1},{6,15,31,1},{6,16,21,1},{6,16,33,1},{6,17,29,1},{6,17,32,1},{6,18,28,1},{6,18,30,1},{6,19,27,1},{6,19,31,1},{6,20,24,1},{6,20,34,1},{6,21,34,1},{6,22,30,1},{6,22,33,1},{6,23,32,1},{7,11,26,1},{7,11,28,1},{7,12,25,1},{7,12,33,1},{7,13,29,1},{7,13,31,1},{7,14,27,1},{7,14,31,1},{7,15,26,1},{7,15,33,1},{7,16,24,1},{7,16,29,1},{7,17,23,1},{7,17,30,1},{7,18,22,1},{7,18,30,1},{7,19,24,1},{7,19,34,1},{7,20,22,1},{7,20,28,1},{7,21,32,2},{7,23,34,1},{7,25,27,1},{8,11,26,1},{8,11,27,1},{8,12,27,1},{8,12,28,1},{8,13,28,1},{8,13,30,1},{8,14,30,1},{8,14,32,1},{8,15,21,1},{8,15,31,1},{8,16,25,1},{8,16,34,1},{8,17,21,1},{8,17,31,1},{8,18,26,1},{8,18,29,1},{8,19,25,1},{8,19,34,1},{8,20,22,1},{8,20,23,1},{8,22,33,1},{8,23,29,1},{8,24,32,1},{8,24,33,1},{9,11,27,1},{9,11,30,1},{9,12,29,1},{9,12,30,1},{9,13,28,1},{9,13,32,1},{9,14,31,1},{9,14,34,1},{9,15,29,1},{9,15,34,1},{9,16,28,1},{9,16,33,1},{9,17,25,1},{9,17,26,1},{9,18,24,2},{9,19,22,1},{9,19,23,1},{9,20,25,1},{9,20,26,1},{9,21,27,1},{9,21,33,1},{9,22,31,1},{9,23,32,1},{10,11,30,1},{10,11,31,1},{10,12,30,1},{10,12,33,1},{10,13,27,1},{10,13,32,1},{10,14,27,1},{10,14,29,1},{10,15,28,1},{10,15,32,1},{10,16,22,1},{10,16,23,1},{10,17,21,1},{10,17,22,1},{10,18,21,1},{10,18,23,1},{10,19,24,1},{10,19,28,1},{10,20,24,1},{10,20,26,1},{10,25,26,1},{10,25,29,1},{10,31,34,1},{10,33,34,1},{11,31,33,1},{11,32,33,1},{11,32,34,1},{12,31,32,1},{12,31,34,1},{12,32,34,1},{13,29,34,1},{13,31,33,1},{13,33,34,1},{14,24,32,1},{14,29,33,1},{14,30,33,1},{15,21,23,1},{15,23,34,1},{15,32,33,1},{16,23,30,1},{16,25,31,1},{16,30,31,1},{17,24,28,1},{17,24,30,1},{17,29,31,1},{18,21,22,1},{18,23,25,1},{18,25,28,1},{19,21,22,1},{19,21,23,1},{19,28,31,1},{20,21,27,1},{20,21,28,1},{20,23,27,1},{21,24,25,2},{21,26,30,1},{21,26,31,1},{21,28,30,1},{21,29,33,1},{22,23,24,2},{22,25,26,1},{22,25,31,1},{22,26,34,1},{22,27,28,1},{22,27,34,1},{22,28,32,1},{22,29,30,1},{22,29,32,1},{23,25,33,1},{23,26,28,1},{23,26,33,1},{23,28,29,1},{24,26,29,1},{24,26,34,1},{24,27,29,1},{24,27,31,1},{24,28,34,1},{25,27,33,1},{25,29,34,1},{25,30,32,1},{25,30,34,1},{26,27,32,1},{26,27,33,1},{26,28,32,1},{26,29,30,1},{27,28,30,1},{27,29,31,1},{27,30,32,1}}},
    {7,6,{{0,1},{2,3}},{{0,2,5,1},{0,2,6,5},{0,3,4,3},{0,3,5,3},{0,4,5,2},{0,4,6,1},{1,2,4,3},{1,2,5,3},{1,3,4,2},{1,3,5,1},{1,3,6,3},{1,4,6,1},{1,5,6,2},{2,4,5,2},{2,4,6,1},{3,4,6,1},{3,5,6,2},{4,5,6,2}}},
    {9,6,{{2,3,4},{0,1}},{{0,2,5,6},{0,3,6,4},{0,3,7,1},{0,3,8,1},{0,4,7,4},{0,4,8,2},{0,6,8,2},{0,7,8,1},{1,2,6,1},{1,2,7,2},{1,2,8,3},{1,3,5,3},{1,3,6,1},{1,3,8,2},{1,4,6,4},{1,4,7,2},{1,5,7,2},{1,5,8,1},{2,6,7,3},{2,6,8,2},{2,7,8,1},{3,5,6,1},{3,5,7,2},{3,7,8,3},{4,5,6,2},{4,5,8,4},{5,6,7,2},{5,6,8,1},{6,7,8,1}}},
    {13,6,{{0,1,2,3,4},{5,6}},{{0,5,7,6},{0,6,8,6},{0,9,10,6},{0,11,12,6},{1,5,8,6},{1,6,9,6},{1,7,11,6},{1,10,12,6},{2,5,9,6},{2,6,7,1},{2,6,10,1},{2,6,11,3},{2,6,12,1},{2,7,10,3},{2,7,12,2},{2,8,10,1},{2,8,11,2},{2,8,12,3},{2,10,11,1},{3,5,12,6},{3,6,7,4},{3,6,10,2},{3,7,10,2},{3,8,9,2},{3,8,10,2},{3,8,11,2},{3,9,11,4},{4,5,10,3},{4,5,11,3},{4,6,10,1},{4,6,11,1},{4,6,12,4},{4,7,8,3},{4,7,9,3},{4,8,10,2},{4,8,11,1},{4,9,11,1},{4,9,12,2},{5,10,11,3},{6,7,12,1},{6,10,11,2},{7,8,9,1},{7,8,10,1},{7,8,12,1},{7,9,12,2},{8,9,11,1},{8,9,12,2}}},
    {15,6,{{0,1,2,3,4},{5,6,7,8}},{{0,5,9,4},{0,5,10,1},{0,5,11,1},{0,6,10,2},{0,6,11,3},{0,6,14,1},{0,7,9,1},{0,7,12,2},{0,7,13,2},{0,7,14,1},{0,8,11,1},{0,8,12,1},{0,8,13,1},{0,8,14,3},{0,9,12,1},{0,10,12,2},{0,10,13,1},{0,11,13,1},{0,13,14,1},{1,5,10,2},{1,5,11,1},{1,5,12,1},{1,5,14,2},{1,6,9,1},{1,6,10,1},{1,6,13,2},{1,6,14,2},{1,7,9,2},{1,7,10,1},{1,7,12,2},{1,7,14,1},{1,8,10,1},{1,8,11,1},{1,8,12,2},{1,8,13,2},{1,9,11,2},{1,9,13,1},{1,10,12,1},{1,11,13,1},{1,11,14,1},{2,5,9,2},{2,5,11,2},{2,5,13,1},{2,5,14,1},{2,6,10,1},{2,6,11,1},{2,6,13,3},{2,6,14,1},{2,7,9,1},{2,7,11,2},{2,7,12,1},{2,7,13,1},{2,7,14,1},{2,8,10,2},{2,8,11,1},{2,8,12,2},{2,8,14,1},{2,9,12,1},{2,9,13,1},{2,9,14,1},{2,10,12,2},{2,10,14,1},{3,5,10,2},{3,5,11,2},{3,5,12,1},{3,5,13,1},{3,6,10,1},{3,6,11,2},{3,6,12,2},{3,6,13,1},{3,7,9,1},{3,7,10,1},{3,7,12,1},{3,7,14,3},{3,8,9,2},{3,8,10,1},{3,8,13,1},{3,8,14,2},{3,9,12,1},{3,9,13,1},{3,9,14,1},{3,10,12,1},{3,11,13,2},{4,5,10,1},{4,5,12,2},{4,5,13,1},{4,5,14,2},{4,6,9,2},{4,6,10,1},{4,6,12,2},{4,6,14,1},{4,7,10,1},{4,7,11,2},{4,7,13,3},{4,8,9,1},{4,8,10,1},{4,8,11,1},{4,8,12,1},{4,8,13,2},{4,9,11,1},{4,9,14,2},{4,10,11,2},{4,12,14,1},{5,12,13,2},{5,13,14,1},{6,9,12,2},{6,9,14,1},{7,9,10,1},{7,10,11,2},{8,9,10,1},{8,9,11,2},{9,10,11,1},{9,10,13,2},{9,10,14,1},{9,12,13,1},{10,11,14,1},{10,13,14,3},{11,12,13,2},{11,12,14,4},{12,13,14,1}}},
    {15,6,{{0,1,2,3,4,5},{6,7}},{{0,6,8,1},{0,6,9,2},{0,6,10,2},{0,6,12,1},{0,7,9,2},{0,7,10,1},{0,7,11,1},{0,7,12,2},{0,8,11,1},{0,8,13,3},{0,8,14,1},{0,9,12,1},{0,9,14,1},{0,10,11,1},{0,10,14,2},{0,11,13,2},{0,11,14,1},{0,12,13,1},{0,12,14,1},{1,6,8,5},{1,6,10,1},{1,7,11,1},{1,7,12,2},{1,7,13,2},{1,7,14,1},{1,8,11,1},{1,9,10,1},{1,9,12,2},{1,9,13,2},{1,9,14,1},{1,10,11,1},{1,10,12,1},{1,10,13,1},{1,10,14,1},{1,11,13,1},{1,11,14,2},{1,12,14,1},{2,6,9,1},{2,6,10,3},{2,6,11,1},{2,6,12,1},{2,7,11,1},{2,7,12,1},{2,7,13,3},{2,7,14,1},{2,8,9,1},{2,8,10,1},{2,8,12,1},{2,8,13,1},{2,8,14,2},{2,9,10,2},{2,9,12,1},{2,9,13,1},{2,11,12,1},{2,11,14,3},{2,12,13,1},{3,6,9,2},{3,6,11,1},{3,6,12,1},{3,6,14,2},{3,7,10,2},{3,7,11,2},{3,7,12,1},{3,7,14,1},{3,8,9,1},{3,8,10,1},{3,8,13,2},{3,8,14,2},{3,9,12,1},{3,9,13,1},{3,9,14,1},{3,10,12,1},{3,10,13,2},{3,11,12,2},{3,11,13,1},{4,6,11,1},{4,6,12,1},{4,6,13,2},{4,6,14,2},{4,7,8,2},{4,7,9,2},{4,7,11,1},{4,7,14,1},{4,8,11,2},{4,8,12,2},{4,9,11,1},{4,9,13,1},{4,9,14,2},{4,10,12,3},{4,10,13,2},{4,10,14,1},{4,11,13,1},{5,6,9,1},{5,6,11,2},{5,6,12,2},{5,6,13,1},{5,7,8,2},{5,7,9,1},{5,7,10,1},{5,7,14,2},{5,8,9,3},{5,8,10,1},{5,9,11,1},{5,10,11,2},{5,10,13,1},{5,10,14,1},{5,11,12,1},{5,12,13,2},{5,12,14,1},{5,13,14,2},{6,11,13,1},{6,13,14,2},{7,8,10,2},{7,9,13,1},{8,9,11,1},{8,10,12,1},{8,11,12,1},{8,12,14,1},{9,10,11,2},{9,10,14,1},{9,11,12,1},{12,13,14,2}}},
    {17,6,{{0,1,2,3,4,5},{6,7,8,9}},{{0,6,10,2},{0,6,11,1},{0,6,13,2},{0,6,14,1},{0,7,10,2},{0,7,11,2},{0,7,13,1},{0,7,16,1},{0,8,10,1},{0,8,13,2},{0,8,14,1},{0,8,15,2},{0,9,10,1},{0,9,13,1},{0,9,14,2},{0,9,16,2},{0,11,15,2},{0,11,16,1},{0,12,14,2},{0,12,15,2},{0,12,16,2},{1,6,10,1},{1,6,11,1},{1,6,12,1},{1,6,13,1},{1,6,14,1},{1,6,15,1},{1,7,10,2},{1,7,11,1},{1,7,13,2},{1,7,14,1},{1,8,10,1},{1,8,12,2},{1,8,13,1},{1,8,14,1},{1,8,15,1},{1,9,10,2},{1,9,15,1},{1,9,16,3},{1,11,14,1},{1,11,15,3},{1,12,13,1},{1,12,16,2},{1,13,14,1},{1,14,16,1},{2,6,10,1},{2,6,13,3},{2,6,14,1},{2,6,16,1},{2,7,10,2},{2,7,11,1},{2,7,13,1},{2,7,15,2},{2,8,10,1},{2,8,11,2},{2,8,12,1},{2,8,15,1},{2,8,16,1},{2,9,11,1},{2,9,12,1},{2,9,14,2},{2,9,15,1},{2,9,16,1},{2,10,12,1},{2,10,15,1},{2,11,14,1},{2,11,15,1},{2,12,13,1},{2,12,14,1},{2,12,16,1},{2,13,16,1},{2,14,16,1},{3,6,10,2},{3,6,11,2},{3,6,12,1},{3,6,14,1},{3,7,11,2},{3,7,12,2},{3,7,13,1},{3,7,16,1},{3,8,13,2},{3,8,14,1},{3,8,16,3},{3,9,12,1},{3,9,14,2},{3,9,15,3},{3,10,13,1},{3,10,14,1},{3,10,15,1},{3,10,16,1},{3,11,13,1},{3,11,16,1},{3,12,14,1},{3,12,15,1},{3,13,15,1},{4,6,11,1},{4,6,12,4},{4,6,16,1},{4,7,12,1},{4,7,13,1},{4,7,14,1},{4,7,15,2},{4,7,16,1},{4,8,12,1},{4,8,13,1},{4,8,14,1},{4,8,15,2},{4,8,16,1},{4,9,10,1},{4,9,11,2},{4,9,13,2},{4,9,15,1},{4,10,13,1},{4,10,14,2},{4,10,16,2},{4,11,13,1},{4,11,14,2},{4,15,16,1},{5,6,14,1},{5,6,15,3},{5,6,16,2},{5,7,12,2},{5,7,14,1},{5,7,15,2},{5,7,16,1},{5,8,10,1},{5,8,11,1},{5,8,12,2},{5,8,14,2},{5,9,10,1},{5,9,11,1},{5,9,12,1},{5,9,13,3},{5,10,13,1},{5,10,15,1},{5,10,16,2},{5,11,12,1},{5,11,13,1},{5,11,14,1},{5,11,16,1},{5,13,14,1},{6,11,14,1},{6,15,16,2},{7,12,14,1},{7,14,16,2},{8,10,11,2},{8,11,16,1},{9,10,12,1},{9,11,12,2},{10,11,12,3},{10,11,13,1},{10,12,13,1},{10,13,14,1},{10,14,15,2},{10,15,16,1},{11,13,16,2},{12,13,15,2},{12,13,16,1},{12,14,15,1},{13,14,15,2},{13,14,16,1},{13,15,16,1},{14,15,16,1}}},
    {18,6,{{0,1,2,3,4,5},{6,7,8,9,10}},{{0,6,11,1},{0,6,12,2},{0,6,13,2},{0,6,17,1},{0,7,11,1},{0,7,12,1},{0,7,14,2},{0,7,15,2},{0,8,11,1},{0,8,15,2},{0,8,16,1},{0,8,17,2},{0,9,11,1},{0,9,12,2},{0,9,13,1},{0,9,14,1},{0,9,15,1},{0,10,13,1},{0,10,14,2},{0,10,16,2},{0,10,17,1},{0,11,15,1},{0,11,17,1},{0,12,16,1},{0,13,16,2},{0,14,17,1},{1,6,11,3},{1,6,12,1},{1,6,13,1},{1,6,15,1},{1,7,13,1},{1,7,14,2},{1,7,16,2},{1,7,17,1},{1,8,12,2},{1,8,14,2},{1,8,15,1},{1,8,16,1},{1,9,11,1},{1,9,13,2},{1,9,17,3},{1,10,11,1},{1,10,13,2},{1,10,15,1},{1,10,16,1},{1,10,17,1},{1,11,16,1},{1,12,15,3},{1,14,16,1},{1,14,17,1},{2,6,11,2},{2,6,12,3},{2,6,13,1},{2,7,11,1},{2,7,12,3},{2,7,17,2},{2,8,11,2},{2,8,13,1},{2,8,14,2},{2,8,17,1},{2,9,13,2},{2,9,14,1},{2,9,15,2},{2,9,16,1},{2,10,13,1},{2,10,15,3},{2,10,16,1},{2,10,17,1},{2,11,13,1},{2,14,16,2},{2,14,17,1},{2,15,16,1},{2,16,17,1},{3,6,13,1},{3,6,14,3},{3,6,16,1},{3,6,17,1},{3,7,11,2},{3,7,12,1},{3,7,15,1},{3,7,16,2},{3,8,11,1},{3,8,12,1},{3,8,13,3},{3,8,17,1},{3,9,11,1},{3,9,13,1},{3,9,15,1},{3,9,16,1},{3,9,17,2},{3,10,12,1},{3,10,13,1},{3,10,14,1},{3,10,15,1},{3,10,16,2},{3,11,14,1},{3,11,17,1},{3,12,14,1},{3,12,15,2},{3,15,17,1},{4,6,13,1},{4,6,14,2},{4,6,15,2},{4,6,16,1},{4,7,11,2},{4,7,13,1},{4,7,14,1},{4,7,16,2},{4,8,11,1},{4,8,12,1},{4,8,13,1},{4,8,14,1},{4,8,15,1},{4,8,17,1},{4,9,11,2},{4,9,12,1},{4,9,15,1},{4,9,16,1},{4,9,17,1},{4,10,12,1},{4,10,14,1},{4,10,15,1},{4,10,17,3},{4,11,14,1},{4,12,13,1},{4,12,15,1},{4,12,16,1},{4,13,16,1},{4,13,17,1},{5,6,14,1},{5,6,15,2},{5,6,16,2},{5,6,17,1},{5,7,12,1},{5,7,13,2},{5,7,14,1},{5,7,15,1},{5,7,17,1},{5,8,14,1},{5,8,15,2},{5,8,16,2},{5,8,17,1},{5,9,12,3},{5,9,14,2},{5,9,16,1},{5,10,11,3},{5,10,12,1},{5,10,13,1},{5,10,14,1},{5,11,13,1},{5,11,16,1},{5,11,17,1},{5,12,13,1},{5,13,17,1},{5,15,17,1},{6,15,17,1},{6,16,17,2},{7,13,15,1},{7,13,17,1},{7,15,17,1},{8,11,12,1},{8,12,16,1},{8,13,16,1},{9,11,14,1},{9,14,16,1},{9,15,16,1},{10,11,12,2},{10,12,14,1},{11,12,13,2},{11,12,14,1},{11,13,14,1},{11,13,16,1},{11,14,15,1},{11,15,16,2},{11,15,17,2},{11,16,17,1},{12,13,17,2},{12,14,16,1},{12,14,17,2},{12,16,17,2},{13,14,15,4},{13,14,17,1},{13,15,16,1},{14,15,16,1}}},
    {21,6,{{0,1,2,3,4,5,6,7},{8,9,10,11}},{{0,8,13,1},{0,8,14,3},{0,8,20,2},{0,9,15,1},{0,9,17,2},{0,9,18,2},{0,9,19,1},{0,10,12,1},{0,10,14,1},{0,10,15,1},{0,10,18,1},{0,10,19,2},{0,11,13,1},{0,11,14,1},{0,11,15,1},{0,11,18,3},{0,12,16,3},{0,12,17,1},{0,12,19,1},{0,13,14,1},{0,13,15,1},{0,13,17,1},{0,13,20,1},{0,15,17,1},{0,15,19,1},{0,16,20,3},{0,17,19,1},{1,8,13,1},{1,8,14,1},{1,8,15,1},{1,8,16,1},{1,8,19,1},{1,8,20,1},{1,9,12,1},{1,9,13,1},{1,9,14,1},{1,9,15,1},{1,9,16,1},{1,9,20,1},{1,10,14,2},{1,10,17,1},{1,10,18,3},{1,11,12,2},{1,11,17,1},{1,11,19,1},{1,11,20,2},{1,12,14,1},{1,12,17,1},{1,12,19,1},{1,13,16,1},{1,13,19,2},{1,13,20,1},{1,14,17,1},{1,15,16,1},{1,15,17,2},{1,15,18,1},{1,16,18,1},{1,16,20,1},{1,18,19,1},{2,8,12,2},{2,8,13,2},{2,8,14,1},{2,8,20,1},{2,9,12,1},{2,9,13,1},{2,9,15,1},{2,9,18,1},{2,9,20,2},{2,10,12,1},{2,10,13,1},{2,10,15,1},{2,10,17,2},{2,10,18,1},{2,11,16,1},{2,11,18,3},{2,11,20,2},{2,12,16,1},{2,12,19,1},{2,13,16,1},{2,13,17,1},{2,14,16,1},{2,14,17,1},{2,14,19,2},{2,14,20,1},{2,15,17,1},{2,15,18,1},{2,15,19,2},{2,16,17,1},{2,16,19,1},{3,8,12,2},{3,8,13,1},{3,8,17,1},{3,8,19,2},{3,9,12,1},{3,9,16,2},{3,9,18,2},{3,9,19,1},{3,10,12,2},{3,10,14,1},{3,10,16,1},{3,10,19,1},{3,10,20,1},{3,11,14,2},{3,11,15,1},{3,11,17,1},{3,11,19,1},{3,11,20,1},{3,12,17,1},{3,13,16,1},{3,13,17,1},{3,13,18,1},{3,13,20,2},{3,14,16,1},{3,14,17,1},{3,14,18,1},{3,15,16,1},{3,15,17,1},{3,15,18,1},{3,15,19,1},{3,15,20,1},{3,18,20,1},{4,8,12,2},{4,8,13,1},{4,8,18,2},{4,8,19,1},{4,9,12,1},{4,9,14,1},{4,9,15,2},{4,9,16,1},{4,9,19,1},{4,10,13,1},{4,10,16,1},{4,10,17,1},{4,10,18,1},{4,10,19,1},{4,10,20,1},{4,11,13,1},{4,11,14,1},{4,11,15,1},{4,11,17,1},{4,11,19,1},{4,11,20,1},{4,12,14,1},{4,12,16,1},{4,12,18,1},{4,13,15,1},{4,13,18,1},{4,13,20,1},{4,14,15,1},{4,14,17,1},{4,14,20,1},{4,15,20,1},{4,16,17,1},{4,16,18,1},{4,16,19,1},{4,17,19,1},{4,17,20,1},{5,8,14,1},{5,8,15,2},{5,8,17,1},{5,8,18,1},{5,8,19,1},{5,9,12,1},{5,9,13,2},{5,9,15,1},{5,9,18,1},{5,9,19,1},{5,10,13,1},{5,10,14,2},{5,10,19,1},{5,10,20,2},{5,11,15,2},{5,11,16,1},{5,11,17,2},{5,11,19,1},{5,12,13,1},{5,12,16,1},{5,12,17,1},{5,12,18,1},{5,12,20,1},{5,13,18,1},{5,13,19,1},{5,14,16,1},{5,14,17,1},{5,14,19,1},{5,15,18,1},{5,16,17,1},{5,16,20,2},{5,18,20,1},{6,8,15,2},{6,8,16,1},{6,8,17,1},{6,8,19,1},{6,8,20,1},{6,9,12,1},{6,9,13,1},{6,9,16,1},{6,9,17,3},{6,10,13,1},{6,10,15,1},{6,10,16,1},{6,10,17,1},{6,10,20,2},{6,11,13,1},{6,11,15,1},{6,11,16,2},{6,11,17,1},{6,11,19,1},{6,12,14,1},{6,12,15,1},{6,12,19,3},{6,13,15,1},{6,13,16,1},{6,13,20,1},{6,14,18,4},{6,14,20,1},{6,18,19,1},{6,18,20,1},{7,8,15,1},{7,8,16,4},{7,8,17,1},{7,9,13,1},{7,9,14,4},{7,9,16,1},{7,10,12,2},{7,10,13,2},{7,10,15,2},{7,11,12,4},{7,11,13,2},{7,13,14,1},{7,14,15,1},{7,15,16,1},{7,15,17,1},{7,17,18,2},{7,17,19,1},{7,17,20,1},{7,18,19,2},{7,18,20,2},{7,19,20,3},{8,17,18,2},{8,18,20,1},{9,17,20,1},{9,19,20,2},{10,15,16,1},{10,16,17,1},{10,16,19,1},{11,13,14,1},{11,14,16,1},{11,16,19,1},{12,13,14,2},{12,13,15,1},{12,13,18,2},{12,14,18,1},{12,15,18,1},{12,15,20,3},{12,17,20,2},{13,14,15,1},{13,15,16,1},{13,16,18,1},{13,17,19,3},{14,15,16,1},{14,15,19,1},{14,15,20,1},{14,16,19,1},{14,17,20,1},{14,19,20,1},{15,18,19,1},{16,17,18,2},{16,18,19,1}}},
    {22,6,{{0,1,2,3,4,5,6,7},{8,9,10,11,12}},{{0,8,14,1},{0,8,17,1},{0,8,18,2},{0,8,20,2},{0,9,13,1},{0,9,14,1},{0,9,16,4},{0,10,13,1},{0,10,16,1},{0,10,18,1},{0,10,19,3},{0,11,14,1},{0,11,20,4},{0,11,21,1},{0,12,13,1},{0,12,17,2},{0,12,18,1},{0,12,19,2},{0,13,18,2},{0,13,21,1},{0,14,15,1},{0,14,17,2},{0,15,17,1},{0,15,21,4},{0,16,19,1},{1,8,13,1},{1,8,14,1},{1,8,16,2},{1,8,17,2},{1,9,13,1},{1,9,15,1},{1,9,16,1},{1,9,18,1},{1,9,21,2},{1,10,13,1},{1,10,14,2},{1,10,18,2},{1,10,19,1},{1,11,14,2},{1,11,16,1},{1,11,19,2},{1,11,21,1},{1,12,15,4},{1,12,18,1},{1,12,21,1},{1,13,20,3},{1,14,18,1},{1,15,17,1},{1,16,19,1},{1,16,20,1},{1,17,19,1},{1,17,20,1},{1,17,21,1},{1,18,20,1},{1,19,21,1},{2,8,13,1},{2,8,14,2},{2,8,16,1},{2,8,17,1},{2,8,20,1},{2,9,13,2},{2,9,14,1},{2,9,17,1},{2,9,19,2},{2,10,13,3},{2,10,14,1},{2,10,15,1},{2,10,16,1},{2,11,14,1},{2,11,16,3},{2,11,19,2},{2,12,17,1},{2,12,18,1},{2,12,19,1},{2,12,20,2},{2,12,21,1},{2,14,19,1},{2,15,18,3},{2,15,21,2},{2,16,20,1},{2,17,20,1},{2,17,21,2},{2,18,20,1},{2,18,21,1},{3,8,13,3},{3,8,14,1},{3,8,16,1},{3,8,18,1},{3,9,13,1},{3,9,14,2},{3,9,16,1},{3,9,17,1},{3,9,21,1},{3,10,13,1},{3,10,14,2},{3,10,17,2},{3,10,18,1},{3,11,16,1},{3,11,17,1},{3,11,19,2},{3,11,20,1},{3,11,21,1},{3,12,18,1},{3,12,19,1},{3,12,20,3},{3,12,21,1},{3,13,21,1},{3,14,21,1},{3,15,17,1},{3,15,18,3},{3,15,19,1},{3,15,20,1},{3,16,17,1},{3,16,19,1},{3,16,21,1},{3,19,20,1},{4,8,13,1},{4,8,14,1},{4,8,15,1},{4,8,17,1},{4,8,18,1},{4,8,20,1},{4,9,14,1},{4,9,17,2},{4,9,18,2},{4,9,20,1},{4,10,14,1},{4,10,15,2},{4,10,17,1},{4,10,18,1},{4,10,20,1},{4,11,13,1},{4,11,14,2},{4,11,18,1},{4,11,21,2},{4,12,15,1},{4,12,16,1},{4,12,18,1},{4,12,19,1},{4,12,20,1},{4,12,21,1},{4,13,15,1},{4,13,16,1},{4,13,19,1},{4,13,21,1},{4,14,20,1},{4,15,19,1},{4,16,17,1},{4,16,19,2},{4,16,21,1},{4,17,20,1},{4,19,21,1},{5,8,15,2},{5,8,16,1},{5,8,17,1},{5,8,20,1},{5,8,21,1},{5,9,13,1},{5,9,14,1},{5,9,15,1},{5,9,17,1},{5,9,20,2},{5,10,15,1},{5,10,16,3},{5,10,17,1},{5,10,18,1},{5,11,15,1},{5,11,16,1},{5,11,17,1},{5,11,18,1},{5,11,20,1},{5,11,21,1},{5,12,14,2},{5,12,15,1},{5,12,18,1},{5,12,19,1},{5,12,21,1},{5,13,18,1},{5,13,19,3},{5,13,21,1},{5,14,17,1},{5,14,19,2},{5,16,21,1},{5,17,20,1},{5,18,20,1},{5,18,21,1},{6,8,15,3},{6,8,16,1},{6,8,19,1},{6,8,20,1},{6,9,15,1},{6,9,17,1},{6,9,18,1},{6,9,19,1},{6,9,20,2},{6,10,17,1},{6,10,19,2},{6,10,20,1},{6,10,21,2},{6,11,13,1},{6,11,15,2},{6,11,18,3},{6,12,14,1},{6,12,16,4},{6,12,21,1},{6,13,17,1},{6,13,19,1},{6,13,20,2},{6,13,21,1},{6,14,17,2},{6,14,18,1},{6,14,21,2},{6,16,18,1},{6,17,19,1},{7,8,18,2},{7,8,19,2},{7,8,21,2},{7,9,15,1},{7,9,18,1},{7,9,19,1},{7,9,20,1},{7,9,21,2},{7,10,15,2},{7,10,17,1},{7,10,20,2},{7,10,21,1},{7,11,13,1},{7,11,15,2},{7,11,17,2},{7,11,18,1},{7,12,13,2},{7,12,14,1},{7,12,16,1},{7,12,17,2},{7,13,18,1},{7,13,19,1},{7,13,20,1},{7,14,15,1},{7,14,16,1},{7,14,18,1},{7,14,19,1},{7,14,20,1},{7,16,17,1},{7,16,19,1},{7,16,20,1},{7,16,21,1},{8,19,21,3},{9,15,19,2},{9,18,21,1},{10,16,21,1},{10,20,21,2},{11,13,15,1},{11,13,17,2},{12,13,14,2},{12,13,17,1},{13,14,15,3},{13,14,16,1},{13,15,16,1},{13,16,17,1},{13,16,18,2},{13,17,21,1},{14,15,16,1},{14,16,17,1},{14,16,18,2},{14,18,19,1},{14,19,20,1},{14,20,21,3},{15,16,17,1},{15,16,20,3},{15,17,19,1},{15,17,20,1},{15,19,20,1},{16,18,21,1},{17,18,19,3},{17,18,20,1},{17,18,21,2},{18,19,20,2},{19,20,21,1}}},
    {24,6,{{0,1,2,3,4,5,6,7},{8,9,10,11,12,13,14}},{{0,8,15,3},{0,8,16,1},{0,8,18,1},{0,8,21,1},{0,9,15,2},{0,9,17,1},{0,9,18,1},{0,9,21,1},{0,9,22,1},{0,10,17,1},{0,10,18,2},{0,10,21,1},{0,10,22,1},{0,10,23,1},{0,11,15,1},{0,11,16,1},{0,11,17,1},{0,11,20,1},{0,11,21,2},{0,12,16,1},{0,12,20,2},{0,12,22,2},{0,12,23,1},{0,13,16,2},{0,13,18,1},{0,13,19,1},{0,13,20,1},{0,13,23,1},{0,14,17,2},{0,14,22,2},{0,14,23,2},{0,16,20,1},{0,17,19,1},{0,18,19,1},{0,19,20,1},{0,19,21,1},{0,19,23,1},{1,8,16,1},{1,8,19,2},{1,8,21,2},{1,8,22,1},{1,9,15,4},{1,9,16,1},{1,9,17,1},{1,10,15,2},{1,10,16,2},{1,10,20,1},{1,10,22,1},{1,11,16,2},{1,11,17,1},{1,11,19,1},{1,11,20,2},{1,12,17,3},{1,12,20,1},{1,12,22,1},{1,12,23,1},{1,13,17,1},{1,13,18,2},{1,13,19,1},{1,13,21,2},{1,14,18,1},{1,14,21,1},{1,14,22,1},{1,14,23,3},{1,18,20,1},{1,18,21,1},{1,18,23,1},{1,19,22,1},{1,19,23,1},{1,20,22,1},{2,8,15,1},{2,8,16,1},{2,8,21,2},{2,8,22,1},{2,8,23,1},{2,9,16,2},{2,9,19,1},{2,9,21,1},{2,9,22,2},{2,10,19,1},{2,10,22,3},{2,10,23,2},{2,11,15,1},{2,11,17,2},{2,11,18,1},{2,11,21,1},{2,11,23,1},{2,12,17,1},{2,12,19,3},{2,12,21,1},{2,12,23,1},{2,13,15,2},{2,13,16,1},{2,13,17,2},{2,13,18,1},{2,14,16,1},{2,14,19,1},{2,14,20,3},{2,14,21,1},{2,15,16,1},{2,15,18,1},{2,17,20,1},{2,18,20,2},{2,18,23,1},{3,8,15,1},{3,8,19,2},{3,8,20,1},{3,8,23,2},{3,9,16,1},{3,9,17,1},{3,9,18,1},{3,9,19,1},{3,9,20,2},{3,10,15,3},{3,10,19,2},{3,10,23,1},{3,11,15,1},{3,11,19,1},{3,11,21,3},{3,11,22,1},{3,12,15,1},{3,12,20,1},{3,12,21,1},{3,12,22,3},{3,13,16,1},{3,13,18,2},{3,13,20,2},{3,13,21,1},{3,14,16,1},{3,14,17,2},{3,14,18,1},{3,14,21,1},{3,14,23,1},{3,16,17,1},{3,16,18,1},{3,16,22,1},{3,17,22,1},{3,17,23,1},{3,18,23,1},{4,8,15,1},{4,8,16,1},{4,8,17,1},{4,8,19,1},{4,8,20,1},{4,8,23,1},{4,9,16,2},{4,9,18,1},{4,9,19,1},{4,9,21,1},{4,9,22,1},{4,10,15,1},{4,10,17,2},{4,10,19,1},{4,10,20,1},{4,10,23,1},{4,11,15,1},{4,11,16,2},{4,11,20,2},{4,11,23,1},{4,12,15,1},{4,12,16,1},{4,12,19,1},{4,12,20,1},{4,12,21,1},{4,12,23,1},{4,13,17,2},{4,13,19,1},{4,13,20,1},{4,13,21,2},{4,14,17,1},{4,14,18,1},{4,14,21,2},{4,14,22,2},{4,15,22,1},{4,15,23,1},{4,18,19,1},{4,18,22,2},{4,18,23,1},{5,8,16,2},{5,8,17,1},{5,8,19,1},{5,8,20,1},{5,8,22,1},{5,9,17,3},{5,9,18,2},{5,9,22,1},{5,10,16,1},{5,10,17,1},{5,10,18,1},{5,10,20,1},{5,10,22,1},{5,10,23,1},{5,11,16,1},{5,11,17,1},{5,11,19,1},{5,11,20,1},{5,11,22,1},{5,11,23,1},{5,12,18,1},{5,12,19,2},{5,12,21,1},{5,12,23,2},{5,13,15,1},{5,13,19,2},{5,13,20,1},{5,13,22,1},{5,13,23,1},{5,14,15,3},{5,14,20,2},{5,14,21,1},{5,15,21,2},{5,16,18,1},{5,16,21,1},{5,18,23,1},{5,21,22,1},{6,8,17,2},{6,8,18,2},{6,8,22,1},{6,8,23,1},{6,9,18,1},{6,9,19,2},{6,9,20,2},{6,9,21,1},{6,10,16,1},{6,10,18,1},{6,10,19,2},{6,10,21,2},{6,11,15,1},{6,11,17,1},{6,11,18,1},{6,11,22,2},{6,11,23,1},{6,12,16,3},{6,12,18,1},{6,12,20,1},{6,12,21,1},{6,13,15,1},{6,13,17,1},{6,13,19,1},{6,13,20,1},{6,13,22,1},{6,13,23,1},{6,14,15,1},{6,14,16,2},{6,14,19,1},{6,14,20,1},{6,14,22,1},{6,15,20,1},{6,15,23,2},{6,17,21,2},{6,22,23,1},{7,8,17,2},{7,8,18,1},{7,8,20,2},{7,8,21,1},{7,9,19,1},{7,9,20,1},{7,9,21,1},{7,9,23,3},{7,10,16,2},{7,10,20,2},{7,10,21,2},{7,11,15,1},{7,11,18,1},{7,11,19,1},{7,11,22,2},{7,11,23,1},{7,12,15,3},{7,12,16,1},{7,12,17,1},{7,12,18,1},{7,13,16,1},{7,13,21,1},{7,13,22,2},{7,13,23,2},{7,14,16,1},{7,14,17,1},{7,14,18,1},{7,14,19,3},{7,15,21,1},{7,15,22,1},{7,16,18,1},{7,17,18,1},{7,17,22,1},{7,19,20,1},{8,18,20,1},{8,18,22,1},{8,22,23,1},{9,20,23,1},{9,21,23,1},{9,22,23,1},{10,17,18,1},{10,17,21,1},{10,18,20,1},{11,18,19,2},{11,18,23,1},{12,15,18,1},{12,17,18,1},{12,18,21,1},{13,15,16,1},{13,15,22,1},{13,22,23,1},{14,15,16,1},{14,15,18,1},{14,18,19,1},{15,16,17,3},{15,17,18,3},{15,19,20,4},{15,19,22,2},{15,20,21,1},{15,21,23,2},{15,22,23,1},{16,17,20,1},{16,17,23,1},{16,18,19,1},{16,18,21,1},{16,18,22,1},{16,19,21,3},{16,19,23,2},{16,20,22,2},{16,20,23,2},{16,21,22,1},{16,22,23,1},{17,19,21,1},{17,19,22,3},{17,19,23,1},{17,20,21,1},{17,20,22,1},{17,20,23,2},{17,21,23,1},{18,20,21,1},{18,21,22,2},{19,21,23,1},{20,21,22,2},{20,21,23,1}}},
    {11,3,{{0,1,2},{3,4,5}},{{0,3,6,3},{0,4,7,3},{0,5,8,3},{0,9,10,3},{1,3,7,3},{1,4,10,3},{1,5,6,1},{1,5,9,2},{1,6,8,2},{1,8,9,1},{2,3,9,3},{2,4,6,1},{2,4,8,2},{2,5,6,1},{2,5,7,1},{2,5,10,1},{2,6,10,1},{2,7,8,1},{2,7,10,1},{3,8,10,3},{4,6,9,2},{4,8,9,1},{5,6,10,1},{5,7,9,1},{5,7,10,1},{6,7,8,1},{6,7,9,1},{6,7,10,1},{7,8,9,1}}},
  };
  return es;
}

const std::vector<OrbitEntry>& orbit_entries() {
  static const std::vector<OrbitEntry> es = {
    {OrbitKind::Eframe,2,3,5,1,16,{{0,5,10},{1,6,11},{2,7,12},{3,8,13},{4,9,14},{15}},{3,4,5,6,7,8,9,10,11,12,13,14,0,1,2,15},5,1,false,1,{0},5,3,{{3,4,11},{4,6,13},{2,14,15},{6,7,8},{1,4,15},{3,7,14},{9,11,12},{2,8,11},{1,3,12},{2,3,9},{1,13,14},{4,8,12},{6,9,15},{7,11,13}}},
    {OrbitKind::Eframe,2,3,5,2,17,{{0,5,10},{1,6,11},{2,7,12},{3,8,13},{4,9,14},{15,16}},{1,2,3,4,0,6,7,8,9,5,11,12,13,14,10,15,16},5,2,false,1,{0},5,3,{{3,5,11},{3,7,11},{3,6,7},{8,12,16},{1,2,15},{1,4,13},{4,6,13},{7,9,15},{2,3,14},{11,12,13},{1,4,7},{11,14,15},{3,14,16},{2,8,16},{8,9,11},{6,9,12}}},
    {OrbitKind::Eframe,2,3,6,1,19,{{0,6,12},{1,7,13},{2,8,14},{3,9,15},{4,10,16},{5,11,17},{18}},{1,2,3,4,5,0,7,8,9,10,11,6,13,14,15,16,17,12,18},6,1,false,1,{0},6,3,{{4,6,13},{5,15,16},{1,4,15},{2,16,18},{9,17,18},{9,10,14},{11,13,15},{4,8,17},{2,3,11},{1,3,8},{1,5,14},{2,7,18},{3,10,13},{4,5,8},{7,9,14},{7,10,11},{13,16,17}}},
    {OrbitKind::Eframe,2,3,6,2,20,{{0,6,12},{1,7,13},{2,8,14},{3,9,15},{4,10,16},{5,11,17},{18,19}},{1,2,3,4,5,0,7,8,9,10,11,6,13,14,15,16,17,12,18,19},6,2,false,1,{0},6,3,{{3,11,14},{5,6,15},{2,4,5},{4,7,14},{4,7,8},{9,11,13},{14,15,16},{3,8,10},{11,16,18},{5,7,18},{1,2,15},{1,3,19},{1,16,18},{2,15,17},{3,14,17},{5,9,10},{8,11,13},{9,13,19},{10,17,19}}},
    {OrbitKind::Eframe,2,6,5,5,35,{{0,5,10,15,20,25},{1,6,11,16,21,26},{2,7,12,17,22,27},{3,8,13,18,23,28},{4,9,14,19,24,29},{30,31,32,33,34}},{1,2,3,4,5,6,7,8,9,0,11,12,13,14,15,16,17,18,19,10,21,22,23,24,25,26,27,28,29,20,30,31,32,33,34},10,5,false,1,{0,5},5,6,{{5,19,27},{3,17,26},{7,14,23},{4,10,28},{1,18,20},{8,27,30},{3,29,33},{9,27,30},{23,26,32},{19,21,33},{16,17,30},{1,19,22},{3,6,9},{7,18,33},{12,14,16},{18,21,29},{13,16,17},{6,12,29},{12,26,28},{17,23,24},{13,24,27},{22,26,31},{22,23,34},{11,14,34},{3,4,21},{1,7,19},{1,2,34},{4,6,28},{7,24,28},{2,4,13},{2,14,31},{8,11,31},{8,11,32},{9,18,32}}},
    {OrbitKind::Eframe,2,6,5,8,38,{{0,5,10,15,20,25},{1,6,11,16,21,26},{2,7,12,17,22,27},{3,8,13,18,23,28},{4,9,14,19,24,29},{30,31,32,33,34,35,36,37}},{1,2,3,4,5,6,7,8,9,0,11,12,13,14,15,16,17,18,19,10,21,22,23,24,25,26,27,28,29,20,30,31,32,33,34,35,36,37},10,8,false,1,{0,5},5,6,{{2,10,21},{1,14,22},{8,14,26},{3,14,26},{1,12,23},{6,18,25},{1,19,25},{6,15,29},{11,14,33},{2,14,30},{12,29,36},{4,8,33},{23,27,30},{7,14,30},{6,8,35},{13,26,31},{1,7,23},{1,9,18},{4,21,34},{13,22,29},{9,23,34},{16,24,37},{2,3,16},{11,19,34},{11,12,35},{1,17,31},{22,24,33},{13,17,19},{26,28,35},{9,26,36},{16,19,32},{17,18,21},{18,27,37},{4,7,37},{21,27,28},{28,29,32},{2,3,32},{3,6,24},{8,12,36},{6,22,31}}},
    {OrbitKind::GddWithClasses,6,2,4,1,9,{{0,4},{1,5},{2,6},{3,7},{8}},{1,2,3,0,5,6,7,4,8},4,2,true,3,{0},4,6,{{1,4,7},{0,3,5},{1,3,8},{1,3,6},{6,7,8},{3,5,6},{5,6,7},{2,3,5},{1,6,8},{3,5,6},{1,2,3},{1,2,7},{1,2,8},{2,5,7},{2,7,8},{5,7,8}}},
    {OrbitKind::GddWithClasses,6,2,5,1,11,{{0,5},{1,6},{2,7},{3,8},{4,9},{10}},{1,2,3,4,0,6,7,8,9,5,10},5,2,true,3,{0},5,6,{{4,5,8},{0,2,9},{2,4,10},{7,9,10},{3,4,6},{2,6,8},{1,8,9},{1,4,8},{3,6,9},{7,8,9},{1,8,9},{1,9,10},{2,6,8},{2,3,4},{1,3,7},{1,7,10},{2,3,4},{2,3,10},{4,6,7},{6,7,10}}},
  };
  return es;
}

}  // namespace triholes::cat
