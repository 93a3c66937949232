/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_get_partlaws_first: (a: number) => [number, number];
export const __wbg_get_partlaws_last: (a: number) => [number, number];
export const __wbg_get_partlaws_verdict: (a: number) => [number, number];
export const __wbg_get_stickrun_compositions: (a: number) => [number, number];
export const __wbg_get_stickrun_expected: (a: number) => [number, number];
export const __wbg_get_stickrun_observed: (a: number) => [number, number];
export const __wbg_get_stickrun_p_value: (a: number) => number;
export const __wbg_get_stickrun_tv: (a: number) => number;
export const __wbg_partlaws_free: (a: number, b: number) => void;
export const __wbg_set_partlaws_first: (a: number, b: number, c: number) => void;
export const __wbg_set_partlaws_last: (a: number, b: number, c: number) => void;
export const __wbg_set_partlaws_verdict: (a: number, b: number, c: number) => void;
export const __wbg_set_stickrun_compositions: (a: number, b: number, c: number) => void;
export const __wbg_set_stickrun_expected: (a: number, b: number, c: number) => void;
export const __wbg_set_stickrun_observed: (a: number, b: number, c: number) => void;
export const __wbg_set_stickrun_p_value: (a: number, b: number) => void;
export const __wbg_set_stickrun_tv: (a: number, b: number) => void;
export const __wbg_stickrun_free: (a: number, b: number) => void;
export const decrement_heatmap: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
export const part_laws: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const stick_breaking_run: (a: number, b: number, c: number, d: number, e: bigint) => [number, number, number];
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __externref_drop_slice: (a: number, b: number) => void;
export const __externref_table_alloc: () => number;
export const __wbindgen_start: () => void;
