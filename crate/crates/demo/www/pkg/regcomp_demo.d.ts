/* tslint:disable */
/* eslint-disable */

export class PartLaws {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    first: Float64Array;
    last: Float64Array;
    verdict: string;
}

export class StickRun {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    compositions: string[];
    expected: Float64Array;
    observed: Float64Array;
    p_value: number;
    tv: number;
}

/**
 * Two-parameter decrement matrix as a row-major `n_max * n_max` grid,
 * zero above the diagonal.
 */
export function decrement_heatmap(alpha: string, theta: string, n_max: number): Float64Array;

/**
 * Laws of the first and last part at size `n`, and the symmetry verdict of
 * the exponent up to `n`.
 */
export function part_laws(alpha: string, theta: string, n: number): PartLaws;

/**
 * Stick-breaking samples with a discrete cut law, against the exact law.
 */
export function stick_breaking_run(atoms: string, n: number, count: number, seed: bigint): StickRun;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_get_partlaws_first: (a: number) => [number, number];
    readonly __wbg_get_partlaws_last: (a: number) => [number, number];
    readonly __wbg_get_partlaws_verdict: (a: number) => [number, number];
    readonly __wbg_get_stickrun_compositions: (a: number) => [number, number];
    readonly __wbg_get_stickrun_expected: (a: number) => [number, number];
    readonly __wbg_get_stickrun_observed: (a: number) => [number, number];
    readonly __wbg_get_stickrun_p_value: (a: number) => number;
    readonly __wbg_get_stickrun_tv: (a: number) => number;
    readonly __wbg_partlaws_free: (a: number, b: number) => void;
    readonly __wbg_set_partlaws_first: (a: number, b: number, c: number) => void;
    readonly __wbg_set_partlaws_last: (a: number, b: number, c: number) => void;
    readonly __wbg_set_partlaws_verdict: (a: number, b: number, c: number) => void;
    readonly __wbg_set_stickrun_compositions: (a: number, b: number, c: number) => void;
    readonly __wbg_set_stickrun_expected: (a: number, b: number, c: number) => void;
    readonly __wbg_set_stickrun_observed: (a: number, b: number, c: number) => void;
    readonly __wbg_set_stickrun_p_value: (a: number, b: number) => void;
    readonly __wbg_set_stickrun_tv: (a: number, b: number) => void;
    readonly __wbg_stickrun_free: (a: number, b: number) => void;
    readonly decrement_heatmap: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly part_laws: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly stick_breaking_run: (a: number, b: number, c: number, d: number, e: bigint) => [number, number, number];
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __externref_drop_slice: (a: number, b: number) => void;
    readonly __externref_table_alloc: () => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
